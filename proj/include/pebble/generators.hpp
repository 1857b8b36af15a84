#pragma once

#include "pebble/graph.hpp"

#include <string_view>

namespace pebble {

/// Flower snark J_m for odd m >= 3, with 4m vertices.
///
/// Vertex order is type-major: v_0..v_{m-1}, then x, y, z. Index i is shown
/// with its signed representative in -k..k (m = 2k + 1), so J_3 carries the
/// labels v0, v1, v-1, x0, ... Edges: inner cycle v_i v_{i+1}; spokes z_i v_i,
/// z_i x_i, z_i y_i; outer 2m-cycle x_{-k} .. x_k y_{-k} .. y_k closed by
/// y_k x_{-k}.
Graph flower_snark(int m);

/// Petersen graph with outer cycle r e0 e1 b-1 b0, inner pentagram
/// a0 a-1 b1 e-1 a1, and spokes r a0, e0 e-1, e1 a-1, b-1 a1, b0 b1.
Graph petersen();

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

/// Parses "flower:3", "petersen", "complete:4", "path:4", "cycle:5".
/// Throws InputError on an unknown family.
Graph generate(std::string_view spec);

} // namespace pebble
