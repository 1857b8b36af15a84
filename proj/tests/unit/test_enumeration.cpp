#include "../oracles.hpp"

#include "pebble/errors.hpp"
#include "pebble/enumeration.hpp"
#include "pebble/generators.hpp"
#include "pebble/sources.hpp"

#include <doctest.h>

#include <random>

using namespace pebble;

TEST_CASE("capped compositions: small families") {
  const auto two = enumerate_capped({{1, 1}, 1});
  REQUIRE(two.size() == 2);
  CHECK(two[0] == Configuration({0, 1}));
  CHECK(two[1] == Configuration({1, 0}));

  const auto twelve = enumerate_capped({{3, 3, 3}, 4});
  CHECK(twelve.size() == 12);
  CHECK(CappedCompositions({{3, 3, 3}, 4}).count() == 12);
  // inclusion-exclusion: C(6,2) - 3 placements with a part >= 4
  CHECK(twelve.size() == 15 - 3);
  CHECK(std::is_sorted(twelve.begin(), twelve.end()));

  CHECK(enumerate_capped({{0, 0}, 0}).size() == 1);
  CHECK(enumerate_capped({{0, 0}, 1}).empty());
  CHECK(CappedCompositions({{2, 2}, 5}).count() == 0);
}

TEST_CASE("capped compositions match brute force and the DP oracle") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    std::vector<int> caps(static_cast<std::size_t>(n));
    int cap_sum = 0;
    for (auto& c : caps) {
      c = static_cast<int>(rng() % 5);
      cap_sum += c;
    }
    const int total = static_cast<int>(rng() % static_cast<unsigned>(cap_sum + 2));
    std::vector<Configuration> brute;
    for (const auto& counts : oracle::all_configurations(n, total)) {
      bool ok = true;
      for (int i = 0; i < n; ++i) {
        ok = ok && counts[static_cast<std::size_t>(i)] <= caps[static_cast<std::size_t>(i)];
      }
      if (ok) {
        brute.emplace_back(counts);
      }
    }
    const EnumSpec spec{caps, total};
    CHECK(enumerate_capped(spec) == brute);
    const CappedCompositions family(spec);
    CHECK(family.count() == oracle::count_capped(caps, total));
    for (std::uint64_t k = 0; k < family.count(); ++k) {
      CHECK(Configuration(family.unrank(k)) == brute[k]);
    }
  }
}

TEST_CASE("J3 z0 family at 12 pebbles") {
  const Graph j3 = flower_snark(3);
  const EnumSpec spec = target_family(j3, Target{*j3.resolve("z0")}, 12);
  CHECK(spec.caps == std::vector<int>{1, 3, 3, 1, 3, 3, 1, 3, 3, 0, 7, 7});
  CHECK(CappedCompositions(spec).count() == oracle::count_capped(spec.caps, 12));
  CHECK(CappedCompositions(spec).count() == 90088);
}

TEST_CASE("streaming enumerator visits the family in order") {
  const EnumSpec spec{{2, 0, 3, 1}, 3};
  CappedEnumerator e(spec);
  std::vector<int> out;
  std::vector<Configuration> seen;
  while (e.next(out)) {
    seen.emplace_back(out);
  }
  CHECK(seen == enumerate_capped(spec));
}

TEST_CASE("max_unsolvable on small graphs") {
  const Graph k2 = generate("complete:2");
  for (Vertex r = 0; r < 2; ++r) {
    const TargetReport rep = max_unsolvable(k2, Target{r});
    CHECK(rep.max_unsolvable == 1);
    CHECK(rep.witness == (r == 1 ? Configuration({1, 0}) : Configuration({0, 1})));
  }
  const Graph c5 = generate("cycle:5");
  for (Vertex r = 0; r < 5; ++r) {
    CHECK(max_unsolvable(c5, Target{r}).max_unsolvable == 4);
  }
  CHECK(find_unsolvable_witness(k2, Target{1}, 1) == Configuration({1, 0}));
  CHECK_FALSE(find_unsolvable_witness(k2, Target{1}, 2).has_value());
}

TEST_CASE("pebbling numbers of small families agree with the naive oracle") {
  for (const std::string spec : {"complete:3", "complete:4", "path:3", "path:4", "cycle:5", "cycle:6"}) {
    CAPTURE(spec);
    const Graph g = generate(spec);
    CHECK(pebbling_number(g).pebbling_number == oracle::pebbling_number_naive(g));
  }
  const ClassZeroReport k3 = is_class_zero(generate("complete:3"));
  CHECK(k3.pebbling_number == 3);
  CHECK(k3.class_zero);
  CHECK_FALSE(k3.order_witness.has_value());

  const ClassZeroReport p4 = is_class_zero(generate("path:4"));
  CHECK(p4.pebbling_number == 8);
  CHECK_FALSE(p4.class_zero);
  REQUIRE(p4.order_witness.has_value());
  CHECK(p4.order_witness->second.total() == 4);
}

TEST_CASE("parallel level scans equal the serial reference") {
  const Graph j3 = flower_snark(3);
  for (const char* label : {"v0", "x0", "z0"}) {
    const Target r{*j3.resolve(label)};
    for (int total : {10, 11, 12}) {
      ScanOptions serial;
      const LevelResult ref = scan_level_serial(j3, r, total, serial);
      for (int jobs : {1, 3, 8}) {
        for (std::uint64_t chunk : {std::uint64_t{7}, std::uint64_t{1024}}) {
          ScanOptions o;
          o.jobs = jobs;
          o.chunk_size = chunk;
          const LevelResult par = scan_level(j3, r, total, o);
          CAPTURE(label);
          CAPTURE(total);
          CAPTURE(jobs);
          CHECK(par.witness == ref.witness);
          CHECK(par.witness_rank == ref.witness_rank);
          CHECK(par.level_size == ref.level_size);
          if (chunk == 1024 && jobs == 1) {
            CHECK(par.tested >= ref.tested);
          }
        }
      }
    }
  }
}

TEST_CASE("reports do not depend on job count or scan direction") {
  const Graph j3 = flower_snark(3);
  ScanOptions one, eight, down;
  one.jobs = 1;
  eight.jobs = 8;
  down.direction = ScanDirection::Downward;
  down.jobs = 8;
  const Target z0{*j3.resolve("z0")};
  const TargetReport a = max_unsolvable(j3, z0, one);
  const TargetReport b = max_unsolvable(j3, z0, eight);
  const TargetReport c = max_unsolvable(j3, z0, down);
  CHECK(a.max_unsolvable == 11);
  CHECK(a.witness == b.witness);
  CHECK(a.configs_tested == b.configs_tested);
  CHECK(a.stats == b.stats);
  CHECK(c.max_unsolvable == 11);
  CHECK(c.witness == a.witness);
}

TEST_CASE("cap filter validation mode") {
  ScanOptions unfiltered;
  unfiltered.cap_filter = false;
  for (const std::string spec : {"cycle:5", "path:4", "petersen"}) {
    CAPTURE(spec);
    const Graph g = generate(spec);
    const ClassZeroReport a = pebbling_number(g);
    const ClassZeroReport b = pebbling_number(g, unfiltered);
    CHECK(a.pebbling_number == b.pebbling_number);
    std::uint64_t verified = 0;
    for (const auto& t : b.per_target) {
      for (const auto& l : t.levels) {
        verified += l.filtered_verified;
      }
    }
    CHECK(verified > 0);
  }
}

TEST_CASE("orbit restriction does not change pi") {
  ScanOptions all;
  all.use_orbits = false;
  for (const std::string spec : {"path:5", "petersen", "flower:3"}) {
    CAPTURE(spec);
    const Graph g = generate(spec);
    const ClassZeroReport a = pebbling_number(g);
    const ClassZeroReport b = pebbling_number(g, all);
    CHECK(a.orbits_used);
    CHECK_FALSE(b.orbits_used);
    CHECK(b.per_target.size() == static_cast<std::size_t>(g.order()));
    CHECK(a.pebbling_number == b.pebbling_number);
  }
}
