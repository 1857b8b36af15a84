#include "pebble/audit.hpp"

#include "pebble/errors.hpp"
#include "pebble/generators.hpp"
#include "pebble/parallel.hpp"
#include "pebble/solver.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace pebble {

std::vector<Vertex> SetSystem::resolve(std::string_view expr) const {
  std::vector<Vertex> out;
  std::size_t pos = 0;
  while (pos <= expr.size()) {
    const auto bar = expr.find('|', pos);
    const auto name = expr.substr(pos, bar == std::string_view::npos ? std::string_view::npos : bar - pos);
    const auto it = sets.find(std::string(name));
    if (it == sets.end()) {
      throw InputError("unknown set '" + std::string(name) + "' in '" + std::string(expr) + "'");
    }
    out.insert(out.end(), it->second.begin(), it->second.end());
    if (bar == std::string_view::npos) {
      break;
    }
    pos = bar + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string LinearBound::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i != 0) {
      out += " + ";
    }
    if (terms[i].first != 1) {
      out += std::to_string(terms[i].first) + " ";
    }
    out += "C(" + terms[i].second + ")";
  }
  return out + " <= " + std::to_string(rhs);
}

void validate(const Graph& g, const BoundSuite& suite) {
  if (!g.resolve(suite.target)) {
    throw InputError("suite target '" + suite.target + "' not found in graph");
  }
  for (const auto& [name, members] : suite.system.sets) {
    for (Vertex v : members) {
      if (v < 0 || v >= g.order()) {
        throw InputError("set " + name + " lists vertex " + std::to_string(v) + " outside the graph");
      }
    }
  }
  for (const auto& b : suite.bounds) {
    if (b.terms.empty()) {
      throw InputError("bound without terms");
    }
    for (const auto& [coef, expr] : b.terms) {
      if (coef <= 0) {
        throw InputError("bound coefficients must be positive: " + b.to_string());
      }
      (void)suite.system.resolve(expr);
    }
  }
}

namespace {

BoundSuite make_suite(const Graph& j3, std::string target, std::string name,
                      std::vector<std::pair<std::string, std::vector<std::string>>> sets,
                      std::vector<LinearBound> bounds) {
  BoundSuite suite;
  suite.target = std::move(target);
  suite.system.name = std::move(name);
  for (auto& [set_name, labels] : sets) {
    auto& members = suite.system.sets[set_name];
    for (const auto& label : labels) {
      members.push_back(*j3.resolve(label));
    }
  }
  suite.bounds = std::move(bounds);
  return suite;
}

LinearBound bound(std::vector<std::pair<int, std::string>> terms, int rhs, std::string description) {
  return LinearBound{std::move(terms), rhs, std::move(description)};
}

} // namespace

std::vector<BoundSuite> builtin_j3_suite() {
  const Graph j3 = flower_snark(3);
  std::vector<BoundSuite> suites;

  suites.push_back(make_suite(
      j3, "z0", "j3-z0",
      {{"A", {"x0", "x1", "x-1"}}, {"B", {"y0", "y1", "y-1"}}, {"E", {"v0", "v1", "v-1"}}, {"F", {"z1", "z-1"}}},
      {
          bound({{1, "F"}, {2, "A"}}, 10, "C(F) + 2C(X) <= 10, X = A"),
          bound({{1, "F"}, {2, "B"}}, 10, "C(F) + 2C(X) <= 10, X = B"),
          bound({{1, "F"}, {2, "E"}}, 10, "C(F) + 2C(X) <= 10, X = E"),
          bound({{1, "F"}, {2, "A|B"}}, 14, "C(F) + 2C(A|B) <= 14"),
          bound({{1, "A"}}, 4, "C(X) <= 4, X = A"),
          bound({{1, "B"}}, 4, "C(X) <= 4, X = B"),
          bound({{1, "E"}}, 4, "C(X) <= 4, X = E"),
          bound({{1, "A|B"}}, 6, "C(A|B) <= 6"),
      }));

  suites.push_back(make_suite(
      j3, "x0", "j3-x0",
      {{"A", {"x1", "z1", "y-1"}}, {"B", {"x-1", "z-1", "y1"}}, {"E", {"z0", "v0", "y0"}}, {"F", {"v1", "v-1"}}},
      {
          bound({{1, "F"}, {2, "E"}}, 10, "C(F) + 2C(X) <= 10, X = E only"),
          bound({{1, "F"}, {2, "A|B"}}, 14, "C(F) + 2C(A|B) <= 14"),
          bound({{1, "A"}}, 4, "C(X) <= 4, X = A"),
          bound({{1, "B"}}, 4, "C(X) <= 4, X = B"),
          bound({{1, "E"}}, 4, "C(X) <= 4, X = E"),
          bound({{1, "A|B"}}, 6, "C(A|B) <= 6"),
      }));

  suites.push_back(make_suite(j3, "v0", "j3-v0",
                              {{"A", {"z1", "x1", "y1"}}, {"B", {"z-1", "x-1", "y-1"}}, {"E", {"x0", "y0"}}},
                              {
                                  bound({{1, "A"}, {2, "E"}}, 11, "C(X) + 2C(E) <= 11, X = A"),
                                  bound({{1, "B"}, {2, "E"}}, 11, "C(X) + 2C(E) <= 11, X = B"),
                                  bound({{1, "A"}}, 8, "C(X) <= 8, X = A"),
                                  bound({{1, "B"}}, 8, "C(X) <= 8, X = B"),
                                  bound({{1, "E"}}, 4, "C(E) <= 4"),
                              }));
  return suites;
}

namespace {

using Clock = std::chrono::steady_clock;

struct CompiledBound {
  std::vector<std::pair<int, std::vector<Vertex>>> terms;
  int rhs = 0;

  int lhs(const std::vector<int>& counts) const {
    int total = 0;
    for (const auto& [coef, members] : terms) {
      int s = 0;
      for (Vertex v : members) {
        s += counts[static_cast<std::size_t>(v)];
      }
      total += coef * s;
    }
    return total;
  }
};

struct LevelTally {
  std::uint64_t scanned = 0;
  std::uint64_t unsolvable = 0;
  std::uint64_t cap_violations = 0;
  std::vector<BoundTally> bounds;
  std::vector<BoundViolation> violations;
  std::vector<std::size_t> kept; // violations kept per bound

  explicit LevelTally(std::size_t nbounds) : bounds(nbounds), kept(nbounds, 0) {}

  void merge(const LevelTally& o, std::size_t keep) {
    scanned += o.scanned;
    unsolvable += o.unsolvable;
    cap_violations += o.cap_violations;
    for (std::size_t b = 0; b < bounds.size(); ++b) {
      bounds[b].violations += o.bounds[b].violations;
      bounds[b].max_lhs = std::max(bounds[b].max_lhs, o.bounds[b].max_lhs);
    }
    for (const auto& v : o.violations) {
      if (kept[v.bound] < keep) {
        ++kept[v.bound];
        violations.push_back(v);
      }
    }
  }
};

class LevelAuditor {
public:
  LevelAuditor(const Graph& g, Target r, const std::vector<CompiledBound>& bounds, const AuditOptions& opts)
      : g_(g), r_(r), bounds_(bounds), opts_(opts), caps_(unsolvability_caps(distances_from(g, r.vertex))) {}

  EnumSpec family(int total) const {
    EnumSpec spec{caps_, total};
    if (!opts_.scan.cap_filter) {
      std::fill(spec.caps.begin(), spec.caps.end(), total);
    }
    return spec;
  }

  void visit(Solver& solver, const std::vector<int>& counts, LevelTally& tally) const {
    ++tally.scanned;
    if (solver.solve(Configuration(counts)).solvable()) {
      return;
    }
    ++tally.unsolvable;
    for (std::size_t v = 0; v < counts.size(); ++v) {
      if (counts[v] > caps_[v]) {
        ++tally.cap_violations;
        break;
      }
    }
    for (std::size_t b = 0; b < bounds_.size(); ++b) {
      const int lhs = bounds_[b].lhs(counts);
      auto& bt = tally.bounds[b];
      bt.max_lhs = std::max(bt.max_lhs, lhs);
      if (lhs > bounds_[b].rhs) {
        ++bt.violations;
        if (tally.kept[b] < opts_.violations_kept_per_bound) {
          ++tally.kept[b];
          tally.violations.push_back(BoundViolation{b, Configuration(counts), lhs});
        }
      }
    }
  }

  LevelTally serial(int total) const {
    LevelTally tally(bounds_.size());
    Solver solver(g_, r_, opts_.scan.solver);
    CappedEnumerator it(family(total));
    std::vector<int> counts;
    while (it.next(counts)) {
      visit(solver, counts, tally);
    }
    return tally;
  }

  LevelTally parallel(int total) const {
    const auto spec = family(total);
    const CappedCompositions comps(spec);
    LevelTally tally(bounds_.size());
    if (comps.count() == 0) {
      return tally;
    }
    const std::uint64_t chunk = std::max<std::uint64_t>(opts_.scan.chunk_size, 1);
    const std::uint64_t chunks = (comps.count() + chunk - 1) / chunk;
    std::vector<LevelTally> parts(chunks, LevelTally(bounds_.size()));
    { Solver probe(g_, r_, opts_.scan.solver); }
    for_each_chunk(
        chunks, opts_.scan.jobs, [&] { return Solver(g_, r_, opts_.scan.solver); },
        [&](Solver& solver, std::uint64_t c) {
          const std::uint64_t begin = c * chunk;
          const std::uint64_t end = std::min(begin + chunk, comps.count());
          auto counts = comps.unrank(begin);
          for (std::uint64_t rank = begin; rank < end; ++rank) {
            visit(solver, counts, parts[c]);
            if (rank + 1 < end) {
              CappedCompositions::next(counts, spec.caps);
            }
          }
        });
    for (const auto& p : parts) {
      tally.merge(p, opts_.violations_kept_per_bound);
    }
    return tally;
  }

private:
  const Graph& g_;
  Target r_;
  const std::vector<CompiledBound>& bounds_;
  const AuditOptions& opts_;
  std::vector<int> caps_;
};

AuditReport run_audit(const Graph& g, Target r, const SetSystem& sys, const std::vector<LinearBound>& bounds,
                      TotalRange range, const AuditOptions& opts, bool serial) {
  const auto start = Clock::now();
  std::vector<CompiledBound> compiled;
  for (const auto& b : bounds) {
    CompiledBound cb;
    cb.rhs = b.rhs;
    for (const auto& [coef, expr] : b.terms) {
      if (coef <= 0) {
        throw InputError("bound coefficients must be positive: " + b.to_string());
      }
      cb.terms.emplace_back(coef, sys.resolve(expr));
    }
    compiled.push_back(std::move(cb));
  }

  const auto caps = unsolvability_caps(distances_from(g, r.vertex));
  const int cap_sum = std::accumulate(caps.begin(), caps.end(), 0);
  const int first = std::max(range.min, 0);
  const int last = range.max < 0 ? cap_sum : range.max;

  AuditReport report;
  report.suite = sys.name;
  report.target = r.vertex;
  report.bounds = bounds;
  report.first_total = first;
  report.last_total = first - 1;

  LevelAuditor auditor(g, r, compiled, opts);
  LevelTally all(bounds.size());
  for (int t = first; t <= last; ++t) {
    const auto level = serial ? auditor.serial(t) : auditor.parallel(t);
    all.merge(level, opts.violations_kept_per_bound);
    report.last_total = t;
    if (opts.stop_on_empty_level && level.unsolvable == 0 && t < last) {
      report.stopped_on_empty_level = true;
      break;
    }
  }

  report.tallies = all.bounds;
  report.violations = std::move(all.violations);
  report.configurations_scanned = all.scanned;
  report.unsolvable = all.unsolvable;
  report.solvable = all.scanned - all.unsolvable;
  report.cap_violations = all.cap_violations;
  report.bounds_checked = all.unsolvable * bounds.size();
  // Violations were recorded per chunk; re-confirm each before reporting.
  for (const auto& v : report.violations) {
    if (is_solvable(g, r, v.configuration, opts.scan.solver).solvable()) {
      throw std::logic_error("reported violation " + v.configuration.to_string() + " is solvable");
    }
  }
  const bool any_violation =
      std::any_of(report.tallies.begin(), report.tallies.end(), [](const BoundTally& t) { return t.violations > 0; });
  report.passed = !any_violation && report.cap_violations == 0;
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

} // namespace

AuditReport check_bound(const Graph& g, Target r, const SetSystem& sys, const std::vector<LinearBound>& bounds,
                        TotalRange range, const AuditOptions& opts) {
  return run_audit(g, r, sys, bounds, range, opts, false);
}

AuditReport check_bound_serial(const Graph& g, Target r, const SetSystem& sys, const std::vector<LinearBound>& bounds,
                               TotalRange range, const AuditOptions& opts) {
  return run_audit(g, r, sys, bounds, range, opts, true);
}

AuditReport check_suite(const Graph& g, const BoundSuite& suite, TotalRange range, const AuditOptions& opts) {
  validate(g, suite);
  return check_bound(g, Target{*g.resolve(suite.target)}, suite.system, suite.bounds, range, opts);
}

} // namespace pebble
