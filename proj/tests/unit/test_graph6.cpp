#include "pebble/errors.hpp"
#include "pebble/generators.hpp"
#include "pebble/graph6.hpp"
#include "pebble/sources.hpp"

#include <doctest.h>

#include <random>

using namespace pebble;

TEST_CASE("graph6 hand encodings") {
  const std::vector<Edge> e{{0, 1}};
  CHECK(encode_graph6(Graph::from_edge_list(2, e)) == "A_");
  CHECK(encode_graph6(Graph::from_edge_list(1, {})) == "@");
  const Graph k2 = decode_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.size() == 1);
  CHECK(decode_graph6("A_\n").order() == 2);
  CHECK(decode_graph6("A_\r\n").order() == 2);
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(decode_graph6("A?"), GraphError); // two vertices, no edge
  CHECK_THROWS_AS(decode_graph6(""), GraphError);
  CHECK_THROWS_AS(decode_graph6("A"), GraphError);      // missing body
  CHECK_THROWS_AS(decode_graph6("A__"), GraphError);    // too long
  CHECK_THROWS_AS(decode_graph6("A`"), GraphError);     // nonzero padding bit
  CHECK_THROWS_AS(decode_graph6("A "), GraphError);     // byte below 63
  CHECK_THROWS_AS(decode_graph6("~??"), GraphError);    // multi-byte header unsupported
  CHECK_THROWS_AS(decode_graph6("?"), GraphError);      // n = 0
}

TEST_CASE("graph6 known strings") {
  CHECK(encode_graph6(flower_snark(3)) == "KwCO?KIcaQCc");
  CHECK(decode_graph6("KwCO?KIcaQCc").same_adjacency(flower_snark(3)));
  CHECK(decode_graph6("Ii_XS?RHO").same_adjacency(petersen()));
}

TEST_CASE("graph6 round trip on generated graphs") {
  for (const std::string spec : {"flower:3", "flower:5", "flower:7", "petersen", "complete:5", "path:7", "cycle:9",
                           "complete:1", "complete:62"}) {
    CAPTURE(spec);
    const Graph g = generate(spec);
    CHECK(decode_graph6(encode_graph6(g)).same_adjacency(g));
  }
  CHECK_THROWS_AS(encode_graph6(generate("path:63")), GraphError);
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 40);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
      edges.emplace_back(static_cast<int>(rng() % static_cast<unsigned>(v)), v);
    }
    for (int k = 0; k < n; ++k) {
      const int u = static_cast<int>(rng() % static_cast<unsigned>(n));
      const int v = static_cast<int>(rng() % static_cast<unsigned>(n));
      if (u != v) {
        edges.emplace_back(u, v);
      }
    }
    const Graph g = Graph::from_edge_list(n, edges);
    const std::string s = encode_graph6(g);
    CHECK(s.size() == 1 + (static_cast<std::size_t>(n * (n - 1) / 2) + 5) / 6);
    CHECK(encode_graph6(decode_graph6(s)) == s);
    CHECK(decode_graph6(s).same_adjacency(g));
  }
}

TEST_CASE("fixture strings survive decode then encode") {
  const auto dir = default_fixtures_dir();
  const auto names = list_fixtures(dir);
  REQUIRE(names.size() >= 6);
  for (const auto& name : names) {
    CAPTURE(name);
    const std::string line = read_text_file(dir / (name + ".g6"));
    const std::string trimmed = line.substr(0, line.find_first_of("\r\n"));
    CHECK(encode_graph6(decode_graph6(trimmed)) == trimmed);
  }
}
