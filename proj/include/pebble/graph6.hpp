#pragma once

#include "pebble/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace pebble {

/// Largest order representable with the single-byte graph6 size header.
inline constexpr int kGraph6MaxOrder = 62;

/// Decodes one graph6 line (trailing newline/CR tolerated). Throws
/// GraphError on a bad header, wrong length, stray padding bits, bytes
/// outside 63..126, or a disconnected graph.
Graph decode_graph6(std::string_view text, std::vector<std::string> labels = {});

/// Encodes under the graph's own vertex order (no canonical relabelling).
/// Throws GraphError when n > 62.
std::string encode_graph6(const Graph& g);

} // namespace pebble
