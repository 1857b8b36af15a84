#include "pebble/audit.hpp"
#include "pebble/enumeration.hpp"
#include "pebble/generators.hpp"
#include "pebble/naive.hpp"
#include "pebble/solver.hpp"

#include <benchmark/benchmark.h>

using namespace pebble;

namespace {

const Graph& j3() {
  static const Graph g = flower_snark(3);
  return g;
}

// One full level: J3, target v0, 12 pebbles (no unsolvable configuration, so every member is solved).
void BM_ScanLevelSerial(benchmark::State& state) {
  const Target r{*j3().resolve("v0")};
  ScanOptions o;
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_level_serial(j3(), r, 12, o));
  }
}
BENCHMARK(BM_ScanLevelSerial)->Unit(benchmark::kMillisecond);

void BM_ScanLevelParallel(benchmark::State& state) {
  const Target r{*j3().resolve("v0")};
  ScanOptions o;
  o.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_level(j3(), r, 12, o));
  }
}
BENCHMARK(BM_ScanLevelParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_AuditSerial(benchmark::State& state) {
  const auto suites = builtin_j3_suite();
  const BoundSuite& z0 = suites.front();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        check_bound_serial(j3(), Target{*j3().resolve(z0.target)}, z0.system, z0.bounds));
  }
}
BENCHMARK(BM_AuditSerial)->Unit(benchmark::kMillisecond);

void BM_AuditParallel(benchmark::State& state) {
  const auto suites = builtin_j3_suite();
  const BoundSuite& z0 = suites.front();
  AuditOptions opts;
  opts.scan.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_bound(j3(), Target{*j3().resolve(z0.target)}, z0.system, z0.bounds, {}, opts));
  }
}
BENCHMARK(BM_AuditParallel)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

// Solver against the naive oracle on every 6-pebble configuration of C5 with target 0.
std::vector<Configuration> c5_level() {
  std::vector<Configuration> out;
  CappedEnumerator e({{6, 6, 6, 6, 6}, 6});
  std::vector<int> c;
  while (e.next(c)) {
    out.emplace_back(c);
  }
  return out;
}

void BM_SolverC5(benchmark::State& state) {
  const Graph c5 = generate("cycle:5");
  const auto level = c5_level();
  Solver solver(c5, Target{0});
  for (auto _ : state) {
    for (const auto& c : level) {
      benchmark::DoNotOptimize(solver.solve(c).verdict);
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(level.size()));
}
BENCHMARK(BM_SolverC5);

void BM_NaiveC5(benchmark::State& state) {
  const Graph c5 = generate("cycle:5");
  const auto level = c5_level();
  for (auto _ : state) {
    for (const auto& c : level) {
      benchmark::DoNotOptimize(is_solvable_naive(c5, Target{0}, c));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(level.size()));
}
BENCHMARK(BM_NaiveC5);

} // namespace

BENCHMARK_MAIN();
