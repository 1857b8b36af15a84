#include "pebble/graph.hpp"

#include "pebble/errors.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <queue>

namespace pebble {

Graph Graph::from_edge_list(int n, std::span<const Edge> edges, std::vector<std::string> labels) {
  if (n <= 0) {
    throw GraphError("graph must have at least one vertex");
  }
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(n)) {
    throw GraphError("expected " + std::to_string(n) + " labels, got " + std::to_string(labels.size()));
  }

  Graph g;
  g.adj_.resize(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                       std::to_string(n));
    }
    if (u == v) {
      throw GraphError("self-loop at vertex " + std::to_string(u));
    }
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    g.edge_count_ += nb.size();
  }
  g.edge_count_ /= 2;
  g.labels_ = std::move(labels);

  const auto dist = distances_from(g, 0);
  const auto unreached = std::find(dist.begin(), dist.end(), -1);
  if (unreached != dist.end()) {
    throw GraphError("graph is disconnected: vertex " + std::to_string(unreached - dist.begin()) +
                     " unreachable from vertex 0");
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

std::string Graph::label(Vertex v) const {
  if (labels_.empty()) {
    return std::to_string(v);
  }
  return labels_.at(static_cast<std::size_t>(v));
}

std::optional<Vertex> Graph::resolve(std::string_view selector) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == selector) {
      return static_cast<Vertex>(i);
    }
  }
  int idx = -1;
  const auto* end = selector.data() + selector.size();
  auto [ptr, ec] = std::from_chars(selector.data(), end, idx);
  if (ec == std::errc() && ptr == end && idx >= 0 && idx < order()) {
    return idx;
  }
  return std::nullopt;
}

std::vector<int> distances_from(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::queue<Vertex> frontier;
  dist[static_cast<std::size_t>(source)] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

std::vector<int> distance_matrix(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> d(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    const auto row = distances_from(g, static_cast<Vertex>(u));
    std::copy(row.begin(), row.end(), d.begin() + static_cast<std::ptrdiff_t>(u * n));
  }
  return d;
}

std::vector<Vertex> neighborhood(const Graph& g, Vertex source, int k) {
  const auto dist = distances_from(g, source);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (dist[static_cast<std::size_t>(v)] == k) {
      out.push_back(v);
    }
  }
  return out;
}

bool GraphMetrics::regular(int k) const {
  return !degree_sequence.empty() && degree_sequence.front() == k && degree_sequence.back() == k;
}

namespace {

// Shortest cycle through BFS from every vertex: a non-tree edge (u, w) seen
// from root s closes a closed walk of length d(u) + d(w) + 1, and the minimum
// over all roots is the girth.
std::optional<int> compute_girth(const Graph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<Vertex> q;
    dist[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        const auto wi = static_cast<std::size_t>(w);
        const auto ui = static_cast<std::size_t>(u);
        if (dist[wi] < 0) {
          dist[wi] = dist[ui] + 1;
          parent[wi] = u;
          q.push(w);
        } else if (parent[ui] != w) {
          best = std::min(best, dist[ui] + dist[wi] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) {
    return std::nullopt;
  }
  return best;
}

} // namespace

GraphMetrics metrics(const Graph& g) {
  GraphMetrics m;
  const int n = g.order();
  m.eccentricity.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    const auto dist = distances_from(g, v);
    m.eccentricity[static_cast<std::size_t>(v)] = *std::max_element(dist.begin(), dist.end());
    m.degree_sequence.push_back(g.degree(v));
  }
  m.diameter = *std::max_element(m.eccentricity.begin(), m.eccentricity.end());
  std::sort(m.degree_sequence.begin(), m.degree_sequence.end());
  m.girth = compute_girth(g);
  return m;
}

} // namespace pebble
