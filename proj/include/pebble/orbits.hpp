#pragma once

#include "pebble/graph.hpp"

#include <optional>
#include <vector>

namespace pebble {

/// Vertex count limit for the backtracking automorphism search.
inline constexpr int kOrbitMaxOrder = 32;

struct OrbitPartition {
  std::vector<int> orbit_of;          ///< orbit id per vertex, ids numbered by representative order
  std::vector<Vertex> representatives; ///< minimum-index vertex of each orbit, ascending

  int orbit_count() const { return static_cast<int>(representatives.size()); }
  std::vector<Vertex> members(int orbit) const;
};

/// Exact orbits of Aut(g). Candidate images are filtered by a distance
/// profile (sorted distance multiset) and every partial map must preserve
/// distances to the vertices already mapped. Throws BudgetError when
/// g.order() > kOrbitMaxOrder.
OrbitPartition vertex_orbits(const Graph& g);

/// An automorphism sending `from` to `to`, if one exists.
std::optional<std::vector<Vertex>> find_automorphism(const Graph& g, Vertex from, Vertex to);

} // namespace pebble
