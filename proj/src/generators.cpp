#include "pebble/generators.hpp"

#include "pebble/errors.hpp"

#include <charconv>
#include <string>
#include <vector>

namespace pebble {

Graph flower_snark(int m) {
  if (m < 3 || m % 2 == 0) {
    throw GraphError("flower snark needs odd m >= 3, got " + std::to_string(m));
  }
  const int k = m / 2;
  auto v = [m](int i) { return ((i % m) + m) % m; };
  auto x = [&](int i) { return m + v(i); };
  auto y = [&](int i) { return 2 * m + v(i); };
  auto z = [&](int i) { return 3 * m + v(i); };

  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    edges.emplace_back(v(i), v(i + 1));
    edges.emplace_back(z(i), v(i));
    edges.emplace_back(z(i), x(i));
    edges.emplace_back(z(i), y(i));
  }
  for (int s = -k; s < k; ++s) {
    edges.emplace_back(x(s), x(s + 1));
    edges.emplace_back(y(s), y(s + 1));
  }
  edges.emplace_back(x(k), y(-k));
  edges.emplace_back(y(k), x(-k));

  std::vector<std::string> labels;
  for (const char* type : {"v", "x", "y", "z"}) {
    for (int i = 0; i < m; ++i) {
      labels.push_back(type + std::to_string(i <= k ? i : i - m));
    }
  }
  return Graph::from_edge_list(4 * m, edges, std::move(labels));
}

Graph petersen() {
  enum : Vertex { r, e0, e1, em1, a0, a1, am1, b0, b1, bm1 };
  const std::vector<Edge> edges = {
      {r, e0},   {e0, e1},  {e1, bm1}, {bm1, b0}, {b0, r},   // outer cycle
      {a0, am1}, {am1, b1}, {b1, em1}, {em1, a1}, {a1, a0},  // pentagram
      {r, a0},   {e0, em1}, {e1, am1}, {bm1, a1}, {b0, b1},  // spokes
  };
  return Graph::from_edge_list(10, edges, {"r", "e0", "e1", "e-1", "a0", "a1", "a-1", "b0", "b1", "b-1"});
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int w = u + 1; w < n; ++w) {
      edges.emplace_back(u, w);
    }
  }
  return Graph::from_edge_list(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u + 1 < n; ++u) {
    edges.emplace_back(u, u + 1);
  }
  return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) {
    throw GraphError("cycle needs at least 3 vertices");
  }
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    edges.emplace_back(u, (u + 1) % n);
  }
  return Graph::from_edge_list(n, edges);
}

Graph generate(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view family = spec.substr(0, colon);
  int param = 0;
  if (colon != std::string_view::npos) {
    const auto arg = spec.substr(colon + 1);
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), param);
    if (ec != std::errc() || ptr != arg.data() + arg.size()) {
      throw InputError("bad generator parameter in '" + std::string(spec) + "'");
    }
  }
  const bool has_param = colon != std::string_view::npos;
  if (family == "petersen" && !has_param) {
    return petersen();
  }
  if (has_param) {
    if (family == "flower") {
      return flower_snark(param);
    }
    if (family == "complete") {
      return complete_graph(param);
    }
    if (family == "path") {
      return path_graph(param);
    }
    if (family == "cycle") {
      return cycle_graph(param);
    }
  }
  throw InputError("unknown generator '" + std::string(spec) +
                   "' (expected flower:M, petersen, complete:N, path:N, cycle:N)");
}

} // namespace pebble
