#pragma once

// Test-only reference computations. Each one is written independently of the
// library routine it checks and is deliberately slow and simple.

#include "pebble/graph.hpp"
#include "pebble/naive.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using pebble::Graph;
using pebble::Vertex;

inline std::vector<std::vector<bool>> adjacency_matrix(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<bool>> a(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (auto [u, v] : g.edges()) {
    a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
    a[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
  }
  return a;
}

/// Every automorphism, by extending partial maps one vertex at a time and
/// checking adjacency against the vertices already placed. Degrees are the
/// only filter, so this shares nothing with the distance-profile search.
inline std::vector<std::vector<Vertex>> all_automorphisms(const Graph& g) {
  const int n = g.order();
  const auto a = adjacency_matrix(g);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<void(int)> extend = [&](int v) {
    if (v == n) {
      out.push_back(image);
      return;
    }
    for (Vertex w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)] || g.degree(w) != g.degree(v)) {
        continue;
      }
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) {
        ok = a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] ==
             a[static_cast<std::size_t>(image[static_cast<std::size_t>(u)])][static_cast<std::size_t>(w)];
      }
      if (!ok) {
        continue;
      }
      image[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = true;
      extend(v + 1);
      used[static_cast<std::size_t>(w)] = false;
    }
    image[static_cast<std::size_t>(v)] = -1;
  };
  extend(0);
  return out;
}

/// Orbits as sorted vertex sets, sorted by smallest member.
inline std::vector<std::vector<Vertex>> orbits_by_enumeration(const Graph& g) {
  std::vector<std::set<Vertex>> reach(static_cast<std::size_t>(g.order()));
  for (const auto& phi : all_automorphisms(g)) {
    for (Vertex v = 0; v < g.order(); ++v) {
      reach[static_cast<std::size_t>(v)].insert(phi[static_cast<std::size_t>(v)]);
    }
  }
  std::set<std::vector<Vertex>> distinct;
  for (const auto& s : reach) {
    distinct.insert({s.begin(), s.end()});
  }
  return {distinct.begin(), distinct.end()};
}

/// Number of ways to write `total` as c_0 + ... + c_{n-1}, 0 <= c_i <= caps[i],
/// by memoised recursion over (position, remaining).
inline std::uint64_t count_capped(const std::vector<int>& caps, int total) {
  std::map<std::pair<std::size_t, int>, std::uint64_t> memo;
  std::function<std::uint64_t(std::size_t, int)> f = [&](std::size_t i, int rem) -> std::uint64_t {
    if (i == caps.size()) {
      return rem == 0 ? 1 : 0;
    }
    auto key = std::make_pair(i, rem);
    if (auto it = memo.find(key); it != memo.end()) {
      return it->second;
    }
    std::uint64_t s = 0;
    for (int k = 0; k <= std::min(caps[i], rem); ++k) {
      s += f(i + 1, rem - k);
    }
    return memo[key] = s;
  };
  return f(0, total);
}

/// Every configuration (uncapped) with the given total, lexicographic order.
inline std::vector<std::vector<int>> all_configurations(int n, int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int rem) {
    if (i == n - 1) {
      c[static_cast<std::size_t>(i)] = rem;
      out.push_back(c);
      return;
    }
    for (int k = rem; k >= 0; --k) {
      c[static_cast<std::size_t>(i)] = k;
      rec(i + 1, rem - k);
    }
  };
  if (n > 0) {
    rec(0, total);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Largest total with an unsolvable configuration for target r, by testing
/// every uncapped configuration level by level with the naive oracle.
inline int max_unsolvable_naive(const Graph& g, Vertex r) {
  int best = 0;
  for (int t = 0; t <= pebble::kNaiveMaxPebbles; ++t) {
    bool any = false;
    for (const auto& c : all_configurations(g.order(), t)) {
      if (pebble::is_solvable_naive(g, pebble::Target{r}, pebble::Configuration(c)) == pebble::Verdict::Unsolvable) {
        any = true;
        break;
      }
    }
    if (!any) {
      return best;
    }
    best = t;
  }
  throw std::runtime_error("max_unsolvable_naive: answer exceeds the naive oracle budget");
}

inline int pebbling_number_naive(const Graph& g) {
  int best = 0;
  for (Vertex r = 0; r < g.order(); ++r) {
    best = std::max(best, max_unsolvable_naive(g, r));
  }
  return best + 1;
}

/// All connected labelled graphs on n vertices, by edge-subset enumeration.
inline std::vector<Graph> connected_graphs(int n) {
  std::vector<pebble::Edge> pairs;
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      pairs.emplace_back(u, v);
    }
  }
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<pebble::Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1U) {
        edges.push_back(pairs[i]);
      }
    }
    // connectivity by union-find so that disconnected subsets never reach the constructor
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
    };
    int comps = n;
    for (auto [u, v] : edges) {
      const int a = find(u), b = find(v);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        --comps;
      }
    }
    if (comps == 1) {
      out.push_back(Graph::from_edge_list(n, edges));
    }
  }
  return out;
}

/// Connected graphs on n vertices up to isomorphism (canonical form = least
/// adjacency bit string over all permutations). Only for n <= 7.
inline std::vector<Graph> connected_graphs_up_to_iso(int n) {
  std::set<std::vector<bool>> seen;
  std::vector<Graph> out;
  for (auto& g : connected_graphs(n)) {
    const auto a = adjacency_matrix(g);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<bool> best;
    do {
      std::vector<bool> bits;
      for (int v = 0; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
          bits.push_back(a[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])]
                          [static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])]);
        }
      }
      if (best.empty() || bits < best) {
        best = bits;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.insert(best).second) {
      out.push_back(std::move(g));
    }
  }
  return out;
}

} // namespace oracle
