#pragma once

#include "pebble/graph.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pebble {

__extension__ typedef unsigned __int128 UInt128;

/// Per-vertex pebble counts. A value type: moves return a new configuration.
class Configuration {
public:
  Configuration() = default;
  /// Throws MoveError on a negative count.
  explicit Configuration(std::vector<int> counts);
  static Configuration empty(int n) { return Configuration(std::vector<int>(static_cast<std::size_t>(n), 0)); }

  int size() const { return static_cast<int>(counts_.size()); }
  int total() const { return total_; }
  int operator[](Vertex v) const { return counts_[static_cast<std::size_t>(v)]; }
  std::span<const int> counts() const { return counts_; }

  /// Sum over a vertex subset.
  int sum(std::span<const Vertex> vertices) const;

  /// Copy with `delta` pebbles added at v (delta may be negative; the
  /// result must stay non-negative).
  Configuration with_added(Vertex v, int delta) const;

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration& a, const Configuration& b) { return a.counts_ <=> b.counts_; }

  std::string to_string() const;

private:
  std::vector<int> counts_;
  int total_ = 0;
};

struct Move {
  Vertex from = 0;
  Vertex to = 0;
  friend bool operator==(const Move&, const Move&) = default;
};

struct Target {
  Vertex vertex = 0;
  friend bool operator==(const Target&, const Target&) = default;
};

/// Exact value numerator / 2^exponent.
class Dyadic {
public:
  Dyadic() = default;
  Dyadic(UInt128 numerator, int exponent);

  UInt128 numerator() const { return num_; }
  int exponent() const { return exp_; }
  double to_double() const;
  /// "7/4", "1", "0", "3/8".
  std::string to_string() const;

  friend bool operator==(const Dyadic& a, const Dyadic& b) { return a.num_ == b.num_ && a.exp_ == b.exp_; }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

private:
  UInt128 num_ = 0; // kept reduced: odd, or zero with exponent 0
  int exp_ = 0;
};

/// Largest distance accepted by weight(); keeps numerators inside 128 bits
/// for any graph6-sized graph.
inline constexpr int kMaxWeightDistance = 100;

/// Throws MoveError when the source holds fewer than two pebbles or the
/// endpoints are not adjacent.
Configuration apply_move(const Graph& g, const Configuration& c, Move m);

/// Sum of c[v] / 2^dist[v], exact.
Dyadic weight(const Configuration& c, std::span<const int> dist);

/// True when a pebble already sits on the target (dist == 0) or some vertex
/// holds at least 2^dist[v] pebbles, so that straight transport along a
/// shortest path reaches the target.
bool trivially_solvable(const Configuration& c, std::span<const int> dist);

/// Per-vertex caps of an unsolvable configuration: 0 at the target and
/// 2^d - 1 elsewhere. Throws BudgetError for distances above 30.
std::vector<int> unsolvability_caps(std::span<const int> dist);

/// Moves that carry one pebble from `source` (holding at least 2^d pebbles)
/// to the target along the lexicographically smallest shortest path.
std::vector<Move> transport_moves(const Graph& g, std::span<const int> dist, Vertex source);

} // namespace pebble
