#pragma once

#include "pebble/configuration.hpp"
#include "pebble/graph.hpp"
#include "pebble/solver.hpp"

namespace pebble {

inline constexpr int kNaiveMaxOrder = 8;
inline constexpr int kNaiveMaxPebbles = 12;

/// Reference decision procedure: plain recursion over every legal move, no
/// pruning and no memo. Only for cross-checking the main solver. Throws
/// BudgetError outside n <= 8, total <= 12.
Verdict is_solvable_naive(const Graph& g, Target r, const Configuration& c);

} // namespace pebble
