#include "pebble/naive.hpp"

#include "pebble/errors.hpp"

#include <vector>

namespace pebble {

namespace {

bool reach(const Graph& g, Vertex r, std::vector<int>& counts) {
  if (counts[static_cast<std::size_t>(r)] > 0) {
    return true;
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    if (counts[static_cast<std::size_t>(u)] < 2) {
      continue;
    }
    for (Vertex w : g.neighbors(u)) {
      counts[static_cast<std::size_t>(u)] -= 2;
      counts[static_cast<std::size_t>(w)] += 1;
      const bool ok = reach(g, r, counts);
      counts[static_cast<std::size_t>(u)] += 2;
      counts[static_cast<std::size_t>(w)] -= 1;
      if (ok) {
        return true;
      }
    }
  }
  return false;
}

} // namespace

Verdict is_solvable_naive(const Graph& g, Target r, const Configuration& c) {
  if (g.order() > kNaiveMaxOrder || c.total() > kNaiveMaxPebbles) {
    throw BudgetError("naive oracle limited to n <= 8 and at most 12 pebbles");
  }
  if (c.size() != g.order() || r.vertex < 0 || r.vertex >= g.order()) {
    throw MoveError("configuration or target does not fit the graph");
  }
  std::vector<int> counts(c.counts().begin(), c.counts().end());
  return reach(g, r.vertex, counts) ? Verdict::Solvable : Verdict::Unsolvable;
}

} // namespace pebble
