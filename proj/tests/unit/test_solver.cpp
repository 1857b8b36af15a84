#include "../oracles.hpp"

#include "pebble/errors.hpp"
#include "pebble/generators.hpp"
#include "pebble/naive.hpp"
#include "pebble/solver.hpp"
#include "pebble/sources.hpp"

#include <doctest.h>

#include <random>

using namespace pebble;

TEST_CASE("K2 basics") {
  const Graph k2 = generate("complete:2");
  const SolveOutcome a = is_solvable(k2, Target{1}, Configuration({2, 0}));
  CHECK(a.solvable());
  CHECK(a.moves == std::vector<Move>{{0, 1}});
  CHECK(!is_solvable(k2, Target{1}, Configuration({1, 0})).solvable());
  const SolveOutcome b = is_solvable(k2, Target{1}, Configuration({0, 1}));
  CHECK(b.solvable());
  CHECK(b.moves.empty());
}

TEST_CASE("certificate replay") {
  const Graph k2 = generate("complete:2");
  CHECK(verify_certificate(k2, Target{1}, Configuration({2, 0}), {{0, 1}}).ok);
  const CertificateCheck empty = verify_certificate(k2, Target{1}, Configuration({2, 0}), {});
  CHECK_FALSE(empty.ok);
  CHECK(empty.failing_step == 0);
  const CertificateCheck bad = verify_certificate(k2, Target{1}, Configuration({1, 0}), {{0, 1}});
  CHECK_FALSE(bad.ok);
  CHECK(bad.failing_step == 0);
  CHECK_FALSE(verify_certificate(generate("path:3"), Target{2}, Configuration({4, 0, 0}), {{0, 2}}).ok);
}

TEST_CASE("input validation") {
  const Graph k2 = generate("complete:2");
  CHECK_THROWS_AS(is_solvable(k2, Target{1}, Configuration({2, 0, 0})), MoveError);
  CHECK_THROWS_AS(is_solvable(k2, Target{1}, Configuration({64, 0})), BudgetError);
  CHECK_THROWS_AS(is_solvable_naive(generate("path:9"), Target{0}, Configuration::empty(9)), BudgetError);
  CHECK_THROWS_AS(is_solvable_naive(k2, Target{0}, Configuration({13, 0})), BudgetError);
}

TEST_CASE("naive oracle agrees on C5 (totals <= 6) and K2 (totals <= 4)") {
  const Graph c5 = generate("cycle:5");
  for (int t = 0; t <= 6; ++t) {
    for (const auto& counts : oracle::all_configurations(5, t)) {
      for (Vertex r = 0; r < 5; ++r) {
        const Configuration c(counts);
        CHECK(is_solvable(c5, Target{r}, c).verdict == is_solvable_naive(c5, Target{r}, c));
      }
    }
  }
  const Graph k2 = generate("complete:2");
  for (int t = 0; t <= 4; ++t) {
    for (const auto& counts : oracle::all_configurations(2, t)) {
      for (Vertex r = 0; r < 2; ++r) {
        const Configuration c(counts);
        CHECK(is_solvable(k2, Target{r}, c).verdict == is_solvable_naive(k2, Target{r}, c));
      }
    }
  }
}

TEST_CASE("completeness on all connected graphs up to 6 vertices, totals <= 6") {
  std::uint64_t checked = 0, mismatches = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : oracle::connected_graphs_up_to_iso(n)) {
      for (Vertex r = 0; r < n; ++r) {
        Solver solver(g, Target{r});
        for (int t = 0; t <= 6; ++t) {
          for (const auto& counts : oracle::all_configurations(n, t)) {
            const Configuration c(counts);
            const SolveOutcome out = solver.solve(c);
            ++checked;
            if (out.verdict != is_solvable_naive(g, Target{r}, c)) {
              ++mismatches;
            }
            if (out.solvable() && !verify_certificate(g, Target{r}, c, out.moves).ok) {
              ++mismatches;
            }
          }
        }
      }
    }
  }
  MESSAGE("configurations checked: " << checked);
  CHECK(checked > 0);
  CHECK(mismatches == 0);
}

TEST_CASE("every solvable verdict on the fixtures replays") {
  std::mt19937_64 rng(5);
  for (const auto& name : list_fixtures(default_fixtures_dir())) {
    const Graph g = load_fixture(name, default_fixtures_dir());
    for (int trial = 0; trial < 100; ++trial) {
      const Vertex r = static_cast<Vertex>(rng() % static_cast<unsigned>(g.order()));
      std::vector<int> counts(static_cast<std::size_t>(g.order()));
      for (auto& x : counts) {
        x = static_cast<int>(rng() % 4);
      }
      counts[static_cast<std::size_t>(r)] = 0;
      const Configuration c(counts);
      const SolveOutcome out = is_solvable(g, Target{r}, c);
      if (out.solvable()) {
        CHECK(verify_certificate(g, Target{r}, c, out.moves).ok);
      }
    }
  }
}

TEST_CASE("solving is deterministic and a reused solver matches a fresh one") {
  const Graph j3 = flower_snark(3);
  const Vertex v0 = *j3.resolve("v0");
  Solver reused(j3, Target{v0});
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> counts(12);
    for (int p = 0; p < 12; ++p) {
      counts[rng() % 12] += 1;
    }
    counts[static_cast<std::size_t>(v0)] = 0;
    const Configuration c(counts);
    const SolveOutcome a = reused.solve(c);
    const SolveOutcome b = is_solvable(j3, Target{v0}, c);
    CHECK(a.verdict == b.verdict);
    CHECK(a.moves == b.moves);
    CHECK(a.stats == b.stats);
  }
}

TEST_CASE("a tiny memo changes effort, not verdicts") {
  const Graph j3 = flower_snark(3);
  std::mt19937_64 rng(13);
  SolverOptions tiny;
  tiny.memo_budget = 4;
  for (int trial = 0; trial < 100; ++trial) {
    const Vertex r = static_cast<Vertex>(rng() % 12);
    std::vector<int> counts(12);
    for (int p = 0; p < 11; ++p) {
      counts[rng() % 12] += 1;
    }
    counts[static_cast<std::size_t>(r)] = 0;
    const Configuration c(counts);
    CHECK(is_solvable(j3, Target{r}, c, tiny).verdict == is_solvable(j3, Target{r}, c).verdict);
  }
}

TEST_CASE("monotonicity: adding a pebble preserves solvability, removing one preserves unsolvability") {
  const Graph j3 = flower_snark(3);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const Vertex r = static_cast<Vertex>(rng() % 12);
    std::vector<int> counts(12);
    for (int p = 0; p < 11; ++p) {
      counts[rng() % 12] += 1;
    }
    const Configuration c(counts);
    const bool solvable = is_solvable(j3, Target{r}, c).solvable();
    for (Vertex v = 0; v < 12; ++v) {
      if (solvable) {
        CHECK(is_solvable(j3, Target{r}, c.with_added(v, 1)).solvable());
      } else if (c[v] > 0) {
        CHECK_FALSE(is_solvable(j3, Target{r}, c.with_added(v, -1)).solvable());
      }
    }
  }
}

TEST_CASE("deep searches on long paths") {
  // no vertex of P8 holds 2^d pebbles, so the cap test never settles the root
  const Graph p8 = generate("path:8");
  const Configuration spread({0, 1, 3, 7, 15, 31, 63, 0});
  const SolveOutcome a = is_solvable(p8, Target{0}, spread);
  REQUIRE(a.solvable());
  CHECK(verify_certificate(p8, Target{0}, spread, a.moves).ok);

  const Configuration far({0, 0, 0, 0, 0, 0, 63, 63});
  const SolveOutcome b = is_solvable(p8, Target{0}, far);
  REQUIRE(b.solvable());
  CHECK(verify_certificate(p8, Target{0}, far, b.moves).ok);
  CHECK(b.moves.size() >= 7);

  // weight 63/64 < 1
  CHECK_FALSE(is_solvable(p8, Target{0}, Configuration({0, 0, 0, 0, 0, 0, 63, 0})).solvable());
}
