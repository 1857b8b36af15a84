#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pebble {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple connected undirected graph. Immutable once constructed.
///
/// Labels are display metadata only; every algorithm works on 0-based
/// indices. A graph without labels reports the decimal index as its label.
class Graph {
public:
  /// Builds a graph from an edge list. Duplicate edges (in either
  /// orientation) are stored once. Throws GraphError on a self-loop, an
  /// out-of-range endpoint, n == 0, or a disconnected result.
  static Graph from_edge_list(int n, std::span<const Edge> edges,
                              std::vector<std::string> labels = {});

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  std::string label(Vertex v) const;
  const std::vector<std::string>& labels() const { return labels_; }

  /// Resolves a target selector: an exact label match first, then a decimal
  /// index. Returns nullopt when neither matches.
  std::optional<Vertex> resolve(std::string_view selector) const;

  /// Same adjacency (labels ignored).
  bool same_adjacency(const Graph& other) const { return adj_ == other.adj_; }

private:
  Graph() = default;

  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

/// Breadth-first distances from `source`. Every entry is finite because
/// graphs are connected.
std::vector<int> distances_from(const Graph& g, Vertex source);

/// All-pairs distance matrix, row-major: d[u * n + v].
std::vector<int> distance_matrix(const Graph& g);

/// Vertices at exactly distance k from `source`.
std::vector<Vertex> neighborhood(const Graph& g, Vertex source, int k);

struct GraphMetrics {
  int diameter = 0;
  std::optional<int> girth; ///< nullopt for acyclic graphs
  std::vector<int> eccentricity;
  std::vector<int> degree_sequence; ///< sorted ascending

  bool regular(int k) const;
};

GraphMetrics metrics(const Graph& g);

} // namespace pebble
