#include "pebble/graph6.hpp"

#include "pebble/errors.hpp"

namespace pebble {

namespace {

constexpr int kBias = 63;

std::string_view trim_line(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

} // namespace

Graph decode_graph6(std::string_view text, std::vector<std::string> labels) {
  text = trim_line(text);
  if (text.empty()) {
    throw GraphError("graph6: empty input");
  }
  for (char ch : text) {
    const int b = static_cast<unsigned char>(ch);
    if (b < kBias || b > kBias + 63) {
      throw GraphError("graph6: byte " + std::to_string(b) + " outside the printable range 63..126");
    }
  }
  const int n = static_cast<unsigned char>(text[0]) - kBias;
  if (n > kGraph6MaxOrder) {
    throw GraphError("graph6: multi-byte size headers (n > 62) are not supported");
  }
  if (n == 0) {
    throw GraphError("graph6: empty graph");
  }

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() != 1 + bytes) {
    throw GraphError("graph6: expected " + std::to_string(1 + bytes) + " bytes for n=" + std::to_string(n) +
                     ", got " + std::to_string(text.size()));
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int group = static_cast<unsigned char>(text[1 + k / 6]) - kBias;
      if ((group >> (5 - k % 6)) & 1) {
        edges.emplace_back(i, j);
      }
    }
  }
  for (; k < bytes * 6; ++k) {
    const int group = static_cast<unsigned char>(text[1 + k / 6]) - kBias;
    if ((group >> (5 - k % 6)) & 1) {
      throw GraphError("graph6: nonzero padding bits");
    }
  }
  return Graph::from_edge_list(n, edges, std::move(labels));
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) {
    throw GraphError("graph6: n=" + std::to_string(n) + " exceeds the single-byte header limit of 62");
  }
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  std::string out(1 + (bits + 5) / 6, static_cast<char>(kBias));
  out[0] = static_cast<char>(kBias + n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.adjacent(i, j)) {
        out[1 + k / 6] = static_cast<char>(out[1 + k / 6] + (1 << (5 - k % 6)));
      }
    }
  }
  return out;
}

} // namespace pebble
