#include "pebble/orbits.hpp"

#include "pebble/errors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace pebble {

std::vector<Vertex> OrbitPartition::members(int orbit) const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < orbit_of.size(); ++v) {
    if (orbit_of[v] == orbit) {
      out.push_back(static_cast<Vertex>(v));
    }
  }
  return out;
}

namespace {

class AutomorphismSearch {
public:
  explicit AutomorphismSearch(const Graph& g)
      : n_(g.order()), dist_(distance_matrix(g)), profile_(static_cast<std::size_t>(n_)) {
    for (int v = 0; v < n_; ++v) {
      auto& p = profile_[static_cast<std::size_t>(v)];
      p.assign(dist_.begin() + v * n_, dist_.begin() + (v + 1) * n_);
      std::sort(p.begin(), p.end());
    }
  }

  bool compatible(Vertex u, Vertex v) const { return profile_[idx(u)] == profile_[idx(v)]; }

  std::optional<std::vector<Vertex>> map(Vertex from, Vertex to) {
    if (!compatible(from, to)) {
      return std::nullopt;
    }
    order_ = bfs_order(from);
    image_.assign(idx(n_), -1);
    used_.assign(idx(n_), false);
    image_[idx(from)] = to;
    used_[idx(to)] = true;
    if (extend(1)) {
      return image_;
    }
    return std::nullopt;
  }

private:
  static std::size_t idx(int v) { return static_cast<std::size_t>(v); }
  int d(Vertex a, Vertex b) const { return dist_[idx(a * n_ + b)]; }

  std::vector<Vertex> bfs_order(Vertex root) const {
    std::vector<Vertex> order{root};
    std::vector<bool> seen(idx(n_), false);
    seen[idx(root)] = true;
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (Vertex w = 0; w < n_; ++w) {
        if (!seen[idx(w)] && d(order[head], w) == 1) {
          seen[idx(w)] = true;
          order.push_back(w);
        }
      }
    }
    return order;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) {
      return true;
    }
    const Vertex w = order_[depth];
    for (Vertex x = 0; x < n_; ++x) {
      if (used_[idx(x)] || !compatible(w, x)) {
        continue;
      }
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const Vertex a = order_[i];
        ok = d(w, a) == d(x, image_[idx(a)]);
      }
      if (!ok) {
        continue;
      }
      image_[idx(w)] = x;
      used_[idx(x)] = true;
      if (extend(depth + 1)) {
        return true;
      }
      image_[idx(w)] = -1;
      used_[idx(x)] = false;
    }
    return false;
  }

  int n_;
  std::vector<int> dist_;
  std::vector<std::vector<int>> profile_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
};

int find_root(std::vector<int>& parent, int v) {
  while (parent[static_cast<std::size_t>(v)] != v) {
    v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
  }
  return v;
}

void unite(std::vector<int>& parent, int a, int b) {
  a = find_root(parent, a);
  b = find_root(parent, b);
  if (a != b) {
    parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
}

} // namespace

std::optional<std::vector<Vertex>> find_automorphism(const Graph& g, Vertex from, Vertex to) {
  if (g.order() > kOrbitMaxOrder) {
    throw BudgetError("automorphism search limited to " + std::to_string(kOrbitMaxOrder) + " vertices");
  }
  AutomorphismSearch search(g);
  return search.map(from, to);
}

OrbitPartition vertex_orbits(const Graph& g) {
  const int n = g.order();
  if (n > kOrbitMaxOrder) {
    throw BudgetError("orbit computation limited to " + std::to_string(kOrbitMaxOrder) + " vertices, got " +
                      std::to_string(n));
  }
  AutomorphismSearch search(g);
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);

  for (Vertex v = 1; v < n; ++v) {
    if (find_root(parent, v) != v) {
      continue;
    }
    for (Vertex rep = 0; rep < v; ++rep) {
      if (find_root(parent, rep) != rep || !search.compatible(rep, v)) {
        continue;
      }
      if (auto sigma = search.map(rep, v)) {
        for (Vertex u = 0; u < n; ++u) {
          unite(parent, u, (*sigma)[static_cast<std::size_t>(u)]);
        }
        break;
      }
    }
  }

  OrbitPartition out;
  out.orbit_of.assign(static_cast<std::size_t>(n), -1);
  for (Vertex v = 0; v < n; ++v) {
    const int root = find_root(parent, v);
    if (root == v) {
      out.orbit_of[static_cast<std::size_t>(v)] = static_cast<int>(out.representatives.size());
      out.representatives.push_back(v);
    } else {
      out.orbit_of[static_cast<std::size_t>(v)] = out.orbit_of[static_cast<std::size_t>(root)];
    }
  }
  return out;
}

} // namespace pebble
