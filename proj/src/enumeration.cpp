#include "pebble/enumeration.hpp"

#include "pebble/errors.hpp"
#include "pebble/orbits.hpp"
#include "pebble/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace pebble {

CappedCompositions::CappedCompositions(EnumSpec spec) : spec_(std::move(spec)) {
  const std::size_t n = spec_.caps.size();
  const int total = spec_.total;
  if (total < 0) {
    return;
  }
  const auto width = static_cast<std::size_t>(total) + 1;
  table_.assign((n + 1) * width, 0);
  table_[n * width] = 1;
  for (std::size_t i = n; i-- > 0;) {
    const int cap = spec_.caps[i];
    for (int s = 0; s <= total; ++s) {
      std::uint64_t sum = 0;
      for (int val = 0; val <= std::min(cap, s); ++val) {
        const std::uint64_t add = table_[(i + 1) * width + static_cast<std::size_t>(s - val)];
        if (sum > std::numeric_limits<std::uint64_t>::max() - add) {
          throw BudgetError("capped composition count overflows 64 bits");
        }
        sum += add;
      }
      table_[i * width + static_cast<std::size_t>(s)] = sum;
    }
  }
  count_ = table_[static_cast<std::size_t>(total)];
}

std::uint64_t CappedCompositions::ways(std::size_t from, int remaining) const {
  return table_[from * (static_cast<std::size_t>(spec_.total) + 1) + static_cast<std::size_t>(remaining)];
}

std::vector<int> CappedCompositions::unrank(std::uint64_t k) const {
  if (k >= count_) {
    throw std::out_of_range("rank beyond the family size");
  }
  const std::size_t n = spec_.caps.size();
  std::vector<int> out(n, 0);
  int remaining = spec_.total;
  for (std::size_t i = 0; i < n; ++i) {
    for (int val = 0; val <= std::min(spec_.caps[i], remaining); ++val) {
      const std::uint64_t c = ways(i + 1, remaining - val);
      if (k < c) {
        out[i] = val;
        remaining -= val;
        break;
      }
      k -= c;
    }
  }
  return out;
}

bool CappedCompositions::next(std::vector<int>& counts, std::span<const int> caps) {
  const std::size_t n = counts.size();
  int suffix = 0;
  for (std::size_t i = n; i-- > 0;) {
    if (i + 1 < n && suffix > 0 && counts[i] < caps[i]) {
      ++counts[i];
      int rest = suffix - 1;
      // Smallest arrangement of `rest` over i+1..n-1: fill from the right.
      for (std::size_t j = n; j-- > i + 1;) {
        counts[j] = std::min(rest, caps[j]);
        rest -= counts[j];
      }
      return true;
    }
    suffix += counts[i];
  }
  return false;
}

CappedEnumerator::CappedEnumerator(EnumSpec spec) : spec_(std::move(spec)) {}

bool CappedEnumerator::next(std::vector<int>& out) {
  if (done_) {
    return false;
  }
  if (!started_) {
    started_ = true;
    const int cap_sum = std::accumulate(spec_.caps.begin(), spec_.caps.end(), 0);
    if (spec_.total < 0 || spec_.total > cap_sum) {
      done_ = true;
      return false;
    }
    current_.assign(spec_.caps.size(), 0);
    int rest = spec_.total;
    for (std::size_t j = current_.size(); j-- > 0;) {
      current_[j] = std::min(rest, spec_.caps[j]);
      rest -= current_[j];
    }
    out = current_;
    return true;
  }
  if (!CappedCompositions::next(current_, spec_.caps)) {
    done_ = true;
    return false;
  }
  out = current_;
  return true;
}

std::vector<Configuration> enumerate_capped(const EnumSpec& spec) {
  std::vector<Configuration> out;
  CappedEnumerator it(spec);
  std::vector<int> counts;
  while (it.next(counts)) {
    out.emplace_back(counts);
  }
  return out;
}

EnumSpec target_family(const Graph& g, Target r, int total) {
  return EnumSpec{unsolvability_caps(distances_from(g, r.vertex)), total};
}

std::string to_string(ScanDirection d) { return d == ScanDirection::Upward ? "upward" : "downward"; }

std::optional<Configuration> TargetReport::witness_at(int total) const {
  for (const auto& level : levels) {
    if (level.total == total) {
      return level.witness;
    }
  }
  return std::nullopt;
}

namespace {

// Family actually walked for a level: capped, or every composition when the
// cap filter is off.
EnumSpec scan_family(const Graph& g, Target r, int total, const ScanOptions& opts) {
  auto spec = target_family(g, r, total);
  if (!opts.cap_filter) {
    std::fill(spec.caps.begin(), spec.caps.end(), std::max(total, 0));
  }
  return spec;
}

struct ConfigCheck {
  bool unsolvable = false;
  bool filtered = false;
};

// Solves one configuration. Configurations outside the cap filter must be
// solvable; anything else is a soundness failure of the filter.
ConfigCheck check_one(Solver& solver, std::span<const int> caps, const std::vector<int>& counts,
                      SearchStats& stats) {
  const auto outcome = solver.solve(Configuration(counts));
  stats += outcome.stats;
  ConfigCheck result;
  result.unsolvable = !outcome.solvable();
  for (std::size_t v = 0; v < counts.size(); ++v) {
    if (counts[v] > caps[v]) {
      result.filtered = true;
      break;
    }
  }
  if (result.filtered && result.unsolvable) {
    throw std::logic_error("cap filter unsound: excluded configuration " + Configuration(counts).to_string() +
                           " is unsolvable");
  }
  return result;
}

struct ChunkResult {
  bool processed = false;
  std::uint64_t tested = 0;
  std::uint64_t filtered = 0;
  std::optional<std::uint64_t> first_unsolvable;
  std::vector<int> witness;
  SearchStats stats;
};

void verify_witness(const Graph& g, Target r, const Configuration& w, const ScanOptions& opts) {
  if (is_solvable(g, r, w, opts.solver).solvable()) {
    throw std::logic_error("witness " + w.to_string() + " failed re-verification");
  }
}

} // namespace

LevelResult scan_level_serial(const Graph& g, Target r, int total, const ScanOptions& opts) {
  const auto spec = scan_family(g, r, total, opts);
  const auto caps = target_family(g, r, total).caps;
  LevelResult out;
  out.total = total;
  out.level_size = CappedCompositions(spec).count();

  Solver solver(g, r, opts.solver);
  CappedEnumerator it(spec);
  std::vector<int> counts;
  std::uint64_t rank = 0;
  while (it.next(counts)) {
    const auto check = check_one(solver, caps, counts, out.stats);
    ++out.tested;
    out.filtered_verified += check.filtered ? 1 : 0;
    if (check.unsolvable) {
      out.witness = Configuration(counts);
      out.witness_rank = rank;
      break;
    }
    ++rank;
  }
  if (out.witness) {
    verify_witness(g, r, *out.witness, opts);
  }
  return out;
}

LevelResult scan_level(const Graph& g, Target r, int total, const ScanOptions& opts) {
  const auto spec = scan_family(g, r, total, opts);
  const auto caps = target_family(g, r, total).caps;
  const CappedCompositions family(spec);
  LevelResult out;
  out.total = total;
  out.level_size = family.count();
  if (out.level_size == 0) {
    return out;
  }

  const std::uint64_t chunk = std::max<std::uint64_t>(opts.chunk_size, 1);
  const std::uint64_t chunks = (out.level_size + chunk - 1) / chunk;
  std::vector<ChunkResult> results(chunks);
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};

  // Validate the solver budget once on the calling thread.
  { Solver probe(g, r, opts.solver); }

  for_each_chunk(
      chunks, opts.jobs, [&] { return Solver(g, r, opts.solver); },
      [&](Solver& solver, std::uint64_t c) {
        const std::uint64_t begin = c * chunk;
        const std::uint64_t end = std::min(begin + chunk, out.level_size);
        if (begin > best.load(std::memory_order_relaxed)) {
          return;
        }
        auto& res = results[c];
        res.processed = true;
        auto counts = family.unrank(begin);
        for (std::uint64_t rank = begin; rank < end; ++rank) {
          if (rank > best.load(std::memory_order_relaxed)) {
            break;
          }
          const auto check = check_one(solver, caps, counts, res.stats);
          ++res.tested;
          res.filtered += check.filtered ? 1 : 0;
          if (check.unsolvable) {
            res.first_unsolvable = rank;
            res.witness = counts;
            std::uint64_t seen = best.load();
            while (rank < seen && !best.compare_exchange_weak(seen, rank)) {
            }
            break;
          }
          if (rank + 1 < end) {
            CappedCompositions::next(counts, spec.caps);
          }
        }
      });

  // Chunks before the witness chunk were scanned completely; anything after
  // it is discarded so the totals do not depend on scheduling.
  for (const auto& res : results) {
    if (!res.processed) {
      break;
    }
    out.tested += res.tested;
    out.filtered_verified += res.filtered;
    out.stats += res.stats;
    if (res.first_unsolvable) {
      out.witness = Configuration(res.witness);
      out.witness_rank = *res.first_unsolvable;
      break;
    }
  }
  if (out.witness) {
    verify_witness(g, r, *out.witness, opts);
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

} // namespace

TargetReport max_unsolvable(const Graph& g, Target r, const ScanOptions& opts) {
  const auto start = Clock::now();
  TargetReport report;
  report.target = r.vertex;
  const auto caps = target_family(g, r, 0).caps;
  const int cap_sum = std::accumulate(caps.begin(), caps.end(), 0);

  auto record = [&](LevelResult level) {
    report.configs_tested += level.tested;
    report.stats += level.stats;
    report.levels.push_back(std::move(level));
    return report.levels.back().witness.has_value();
  };

  if (opts.direction == ScanDirection::Upward) {
    // n - 1 is always attained: one pebble on every non-target vertex.
    int t = g.order() - 1;
    for (; t <= cap_sum; ++t) {
      if (!record(scan_level(g, r, t, opts))) {
        break;
      }
    }
    report.max_unsolvable = t - 1;
  } else {
    int t = cap_sum;
    for (; t >= 0; --t) {
      if (record(scan_level(g, r, t, opts))) {
        break;
      }
    }
    report.max_unsolvable = t;
  }
  if (auto w = report.witness_at(report.max_unsolvable)) {
    report.witness = *w;
  } else {
    throw std::logic_error("scan ended without a witness at the maximum level");
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

ClassZeroReport pebbling_number(const Graph& g, const ScanOptions& opts, std::string graph_id) {
  const auto start = Clock::now();
  ClassZeroReport report;
  report.graph_id = std::move(graph_id);
  report.order = g.order();
  report.orbits_used = opts.use_orbits;
  report.options = opts;

  std::vector<Vertex> targets;
  if (opts.use_orbits) {
    targets = vertex_orbits(g).representatives;
  } else {
    targets.resize(static_cast<std::size_t>(g.order()));
    std::iota(targets.begin(), targets.end(), 0);
  }
  int worst = -1;
  for (Vertex t : targets) {
    report.per_target.push_back(max_unsolvable(g, Target{t}, opts));
    worst = std::max(worst, report.per_target.back().max_unsolvable);
  }
  report.pebbling_number = worst + 1;
  report.class_zero = report.pebbling_number == g.order();

  if (!report.class_zero) {
    for (const auto& tr : report.per_target) {
      if (tr.max_unsolvable < g.order()) {
        continue;
      }
      auto w = tr.witness_at(g.order());
      if (!w) {
        w = find_unsolvable_witness(g, Target{tr.target}, g.order(), opts);
      }
      report.order_witness = std::make_pair(tr.target, *w);
      break;
    }
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

ClassZeroReport is_class_zero(const Graph& g, const ScanOptions& opts, std::string graph_id) {
  auto report = pebbling_number(g, opts, std::move(graph_id));
  if (!report.class_zero && !report.order_witness) {
    throw std::logic_error("not Class 0 but no n-pebble witness was recorded");
  }
  return report;
}

std::optional<Configuration> find_unsolvable_witness(const Graph& g, Target r, int total, const ScanOptions& opts) {
  if (total < 0) {
    throw InputError("total must be non-negative");
  }
  return scan_level(g, r, total, opts).witness;
}

} // namespace pebble
