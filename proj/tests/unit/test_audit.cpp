#include "pebble/audit.hpp"
#include "pebble/errors.hpp"
#include "pebble/generators.hpp"
#include "pebble/solver.hpp"

#include <doctest.h>

using namespace pebble;

namespace {

SetSystem z0_sets(const Graph& j3) {
  auto ids = [&](std::initializer_list<const char*> labels) {
    std::vector<Vertex> out;
    for (const char* l : labels) {
      out.push_back(*j3.resolve(l));
    }
    return out;
  };
  SetSystem s;
  s.name = "z0";
  s.sets["A"] = ids({"x0", "x1", "x-1"});
  s.sets["B"] = ids({"y0", "y1", "y-1"});
  s.sets["F"] = ids({"z1", "z-1"});
  return s;
}

} // namespace

TEST_CASE("set expressions") {
  const Graph j3 = flower_snark(3);
  const SetSystem s = z0_sets(j3);
  CHECK(s.resolve("A").size() == 3);
  CHECK(s.resolve("A|B").size() == 6);
  CHECK(s.resolve("A|A").size() == 3);
  CHECK_THROWS_AS(s.resolve("Q"), InputError);
  LinearBound b{{{1, "F"}, {2, "A|B"}}, 14, ""};
  CHECK(b.to_string() == "C(F) + 2 C(A|B) <= 14");
}

TEST_CASE("suite validation") {
  const Graph j3 = flower_snark(3);
  BoundSuite bad{"z0", z0_sets(j3), {{{{1, "Q"}}, 3, ""}}};
  CHECK_THROWS_AS(validate(j3, bad), InputError);
  BoundSuite zero{"z0", z0_sets(j3), {{{{0, "A"}}, 3, ""}}};
  CHECK_THROWS_AS(validate(j3, zero), InputError);
  BoundSuite target{"w9", z0_sets(j3), {}};
  CHECK_THROWS_AS(validate(j3, target), InputError);
  for (const auto& s : builtin_j3_suite()) {
    CHECK_NOTHROW(validate(j3, s));
  }
}

TEST_CASE("a tightened bound is violated by explicit unsolvable configurations") {
  const Graph j3 = flower_snark(3);
  const Target z0{*j3.resolve("z0")};
  const std::vector<LinearBound> tight{{{{1, "F"}, {2, "A|B"}}, 5, "tightened"}};
  const AuditReport rep = check_bound(j3, z0, z0_sets(j3), tight);
  CHECK_FALSE(rep.passed);
  CHECK(rep.tallies[0].violations > 0);
  REQUIRE_FALSE(rep.violations.empty());
  for (const auto& v : rep.violations) {
    CHECK(v.lhs > 5);
    CHECK_FALSE(is_solvable(j3, z0, v.configuration).solvable());
  }
}

TEST_CASE("parallel and serial audits agree") {
  const Graph j3 = flower_snark(3);
  const Target z0{*j3.resolve("z0")};
  const std::vector<LinearBound> bounds{{{{1, "F"}, {2, "A|B"}}, 9, ""}, {{{1, "A"}}, 4, ""}};
  AuditOptions opts;
  opts.scan.jobs = 8;
  opts.scan.chunk_size = 97;
  const AuditReport par = check_bound(j3, z0, z0_sets(j3), bounds, {}, opts);
  const AuditReport ser = check_bound_serial(j3, z0, z0_sets(j3), bounds);
  CHECK(par.unsolvable == ser.unsolvable);
  CHECK(par.configurations_scanned == ser.configurations_scanned);
  CHECK(par.tallies[0].violations == ser.tallies[0].violations);
  CHECK(par.tallies[0].max_lhs == ser.tallies[0].max_lhs);
  CHECK(par.tallies[1].max_lhs == ser.tallies[1].max_lhs);
  REQUIRE(par.violations.size() == ser.violations.size());
  for (std::size_t i = 0; i < par.violations.size(); ++i) {
    CHECK(par.violations[i].configuration == ser.violations[i].configuration);
  }
}

TEST_CASE("audit respects a total range") {
  const Graph j3 = flower_snark(3);
  const Target z0{*j3.resolve("z0")};
  const std::vector<LinearBound> bounds{{{{1, "A"}}, 4, ""}};
  const AuditReport rep = check_bound(j3, z0, z0_sets(j3), bounds, {10, 11});
  CHECK(rep.first_total == 10);
  CHECK(rep.last_total == 11);
  CHECK(rep.passed);
}
