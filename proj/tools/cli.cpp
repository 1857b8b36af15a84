#include "pebble/cli.hpp"

#include "pebble/audit.hpp"
#include "pebble/enumeration.hpp"
#include "pebble/errors.hpp"
#include "pebble/generators.hpp"
#include "pebble/graph6.hpp"
#include "pebble/hog_client.hpp"
#include "pebble/json_io.hpp"
#include "pebble/orbits.hpp"
#include "pebble/parallel.hpp"
#include "pebble/solver.hpp"
#include "pebble/sources.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace pebble::cli {

namespace {

namespace fs = std::filesystem;

struct GraphSource {
  std::string g6;
  std::string fixture;
  int hog = 0;
  std::string gen;
  std::string fixtures_dir;

  void add_to(CLI::App* cmd) {
    auto* a = cmd->add_option("--g6", g6, "inline graph6 string");
    auto* b = cmd->add_option("--fixture", fixture, "fixture name (e.g. hog1395, j3)");
    auto* c = cmd->add_option("--hog", hog, "House of Graphs id (cached download)");
    auto* d = cmd->add_option("--gen", gen, "generator spec: flower:M, petersen, complete:N, path:N, cycle:N");
    a->excludes(b, c, d);
    b->excludes(c, d);
    c->excludes(d);
    cmd->add_option("--fixtures-dir", fixtures_dir, "fixture directory (default $PEBBLE_FIXTURES_DIR or the built-in path)");
  }

  bool given() const { return !g6.empty() || !fixture.empty() || hog != 0 || !gen.empty(); }

  fs::path dir() const { return fixtures_dir.empty() ? default_fixtures_dir() : fs::path(fixtures_dir); }
};

struct LoadedGraph {
  Graph graph;
  std::string id;
};

struct CommonFlags {
  bool json = false;
  bool no_timings = false;
  int jobs = 0;
  std::string scan = "up";
  bool no_orbits = false;
  bool no_cap_filter = false;
  std::size_t memo_budget = kDefaultMemoBudget;

  void add_output(CLI::App* cmd) {
    cmd->add_flag("--json", json, "JSON report on stdout");
    cmd->add_flag("--no-timings", no_timings, "omit elapsed times from reports");
  }

  void add_search(CLI::App* cmd) {
    cmd->add_option("--jobs", jobs, "worker threads; 0 = available parallelism")->check(CLI::NonNegativeNumber);
    cmd->add_option("--scan", scan, "level scan direction")->check(CLI::IsMember({"up", "down"}));
    cmd->add_flag("--no-orbits", no_orbits, "scan every target, not only orbit representatives");
    cmd->add_flag("--no-cap-filter", no_cap_filter, "enumerate all compositions and verify the excluded ones");
    cmd->add_option("--memo-budget", memo_budget, "refuted-state memo entries per solver call");
  }

  ScanOptions scan_options() const {
    ScanOptions o;
    o.jobs = jobs == 0 ? available_parallelism() : jobs;
    o.direction = scan == "down" ? ScanDirection::Downward : ScanDirection::Upward;
    o.use_orbits = !no_orbits;
    o.cap_filter = !no_cap_filter;
    o.solver.memo_budget = memo_budget;
    return o;
  }

  ReportOptions report_options() const { return {.timings = !no_timings}; }
};

LoadedGraph load(const GraphSource& src, std::ostream& err) {
  if (!src.g6.empty()) {
    return {decode_graph6(src.g6), "g6:" + src.g6};
  }
  if (!src.fixture.empty()) {
    return {load_fixture(src.fixture, src.dir()), src.fixture};
  }
  if (src.hog != 0) {
    auto r = fetch_graph(src.hog, HogOptions::from_env(), err);
    return {std::move(r.graph), "hog:" + std::to_string(src.hog)};
  }
  if (!src.gen.empty()) {
    return {generate(src.gen), src.gen};
  }
  throw CLI::ValidationError("graph source", "one of --g6, --fixture, --hog, --gen is required");
}

Vertex resolve_target(const Graph& g, const std::string& selector) {
  if (auto v = g.resolve(selector)) {
    return *v;
  }
  throw InputError("unknown target '" + selector + "'");
}

std::vector<int> parse_counts(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 0) {
        throw std::invalid_argument(item);
      }
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw InputError("--counts expects comma-separated non-negative integers, got '" + item + "'");
    }
  }
  return out;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string labelled(const Graph& g, const Configuration& c) {
  std::string s;
  for (Vertex v = 0; v < c.size(); ++v) {
    if (c[v] != 0) {
      s += (s.empty() ? "" : " ") + g.label(v) + ":" + std::to_string(c[v]);
    }
  }
  return s.empty() ? "(empty)" : s;
}

int expect_result(const std::string& expect, const std::string& actual, std::ostream& err) {
  if (expect.empty() || expect == actual) {
    return kOk;
  }
  err << "expected " << expect << ", got " << actual << "\n";
  return kExpectMismatch;
}

// ---- commands -------------------------------------------------------------

struct SolveCmd {
  GraphSource src;
  CommonFlags flags;
  std::string target, config, counts, expect;

  int run(std::ostream& out, std::ostream& err) {
    std::optional<ConfigDocument> doc;
    if (!config.empty()) {
      doc = parse_config_document(read_json_file(resolve_data_file(config, src.dir())));
    }
    LoadedGraph lg = [&] {
      if (src.given()) {
        return load(src, err);
      }
      if (doc && doc->graph_id) {
        return LoadedGraph{load_graph_by_id(*doc->graph_id, src.dir()), *doc->graph_id};
      }
      if (doc && doc->graph_g6) {
        return LoadedGraph{decode_graph6(*doc->graph_g6, doc->graph_labels), "g6:" + *doc->graph_g6};
      }
      throw CLI::ValidationError("graph source", "no graph given and the configuration names none");
    }();
    const Graph& g = lg.graph;

    std::string selector = target;
    if (selector.empty() && doc && doc->target) {
      selector = *doc->target;
    }
    if (selector.empty()) {
      throw CLI::ValidationError("--target", "required (or a \"target\" field in the configuration)");
    }
    const Vertex r = resolve_target(g, selector);
    const Configuration c = doc ? doc->configuration : Configuration(parse_counts(counts));
    if (c.size() != g.order()) {
      throw InputError("configuration has " + std::to_string(c.size()) + " entries, graph has " +
                       std::to_string(g.order()) + " vertices");
    }

    SolverOptions so;
    so.memo_budget = flags.memo_budget;
    const SolveOutcome res = is_solvable(g, Target{r}, c, so);
    const bool verified = !res.solvable() || verify_certificate(g, Target{r}, c, res.moves).ok;
    if (!verified) {
      err << "internal error: certificate failed replay\n";
    }
    const auto dist = distances_from(g, r);

    if (flags.json) {
      Json j{{"graph", lg.id},
             {"counts", to_json(c)},
             {"total", c.total()},
             {"weight", weight(c, dist).to_string()}};
      j.update(certificate_json(g, Target{r}, res));
      j["certificateVerified"] = verified;
      emit(out, j);
    } else {
      out << "graph     " << lg.id << "\n"
          << "target    " << g.label(r) << "\n"
          << "counts    " << labelled(g, c) << " (total " << c.total() << ")\n"
          << "weight    " << weight(c, dist).to_string() << "\n"
          << "verdict   " << to_string(res.verdict) << "\n";
      if (res.solvable()) {
        out << "moves     " << res.moves.size() << (verified ? " (replayed ok)" : " (REPLAY FAILED)") << "\n";
        for (const auto& m : res.moves) {
          out << "  " << g.label(m.from) << " -> " << g.label(m.to) << "\n";
        }
      }
      out << "nodes     " << res.stats.nodes_expanded << "\n";
    }
    if (!verified) {
      return kUsage;
    }
    return expect_result(expect, to_string(res.verdict), err);
  }
};

struct WitnessCmd {
  GraphSource src;
  CommonFlags flags;
  std::string target, expect;
  int total = -1;

  int run(std::ostream& out, std::ostream& err) {
    LoadedGraph lg = load(src, err);
    const Graph& g = lg.graph;
    const Vertex r = resolve_target(g, target);
    const int t = total >= 0 ? total : g.order();
    const auto w = find_unsolvable_witness(g, Target{r}, t, flags.scan_options());
    if (flags.json) {
      Json j{{"graph", lg.id}, {"target", r}, {"targetLabel", g.label(r)}, {"total", t}, {"found", w.has_value()}};
      j["witness"] = w ? to_json(*w) : Json(nullptr);
      emit(out, j);
    } else {
      out << "graph     " << lg.id << "\n"
          << "target    " << g.label(r) << "\n"
          << "total     " << t << "\n"
          << "witness   " << (w ? w->to_string() + "  [" + labelled(g, *w) + "]" : "none (every configuration solvable)")
          << "\n";
    }
    return expect_result(expect, w ? "found" : "none", err);
  }
};

void print_target_row(std::ostream& out, const Graph& g, const TargetReport& t, bool timings) {
  out << "  " << std::left << std::setw(8) << g.label(t.target) << std::setw(8) << t.max_unsolvable
      << std::setw(12) << t.configs_tested << labelled(g, t.witness);
  if (timings) {
    out << "  (" << std::fixed << std::setprecision(2) << t.elapsed_seconds << "s)";
  }
  out << "\n";
}

struct PiCmd {
  GraphSource src;
  CommonFlags flags;
  std::string target;
  int expect = -1;

  int run(std::ostream& out, std::ostream& err) {
    LoadedGraph lg = load(src, err);
    const Graph& g = lg.graph;
    const ScanOptions opts = flags.scan_options();
    int value = 0;
    if (!target.empty()) {
      const Vertex r = resolve_target(g, target);
      const TargetReport rep = max_unsolvable(g, Target{r}, opts);
      value = rep.max_unsolvable + 1;
      if (flags.json) {
        Json j{{"graph", lg.id}, {"targetPebblingNumber", value}};
        j["report"] = to_json(g, rep, flags.report_options());
        emit(out, j);
      } else {
        out << "graph     " << lg.id << "\n"
            << "pi(G, " << g.label(r) << ") = " << value << "\n"
            << "  target  max     tested      witness\n";
        print_target_row(out, g, rep, !flags.no_timings);
      }
    } else {
      const ClassZeroReport rep = pebbling_number(g, opts, lg.id);
      value = rep.pebbling_number;
      if (flags.json) {
        emit(out, to_json(g, rep, flags.report_options()));
      } else {
        out << "graph     " << lg.id << " (n = " << rep.order << ")\n"
            << "pi(G) = " << value << "\n"
            << "  target  max     tested      witness\n";
        for (const auto& t : rep.per_target) {
          print_target_row(out, g, t, !flags.no_timings);
        }
      }
    }
    if (expect >= 0 && value != expect) {
      err << "expected pi = " << expect << ", got " << value << "\n";
      return kExpectMismatch;
    }
    return kOk;
  }
};

struct ClassZeroCmd {
  GraphSource src;
  CommonFlags flags;
  std::string expect;

  int run(std::ostream& out, std::ostream& err) {
    LoadedGraph lg = load(src, err);
    const Graph& g = lg.graph;
    const ClassZeroReport rep = is_class_zero(g, flags.scan_options(), lg.id);
    if (flags.json) {
      emit(out, to_json(g, rep, flags.report_options()));
    } else {
      out << "graph       " << lg.id << " (n = " << rep.order << ", targets: "
          << (rep.orbits_used ? "orbit representatives" : "all") << ")\n"
          << "pi(G)       " << rep.pebbling_number << "\n"
          << "class 0     " << (rep.class_zero ? "yes" : "no") << "\n";
      if (rep.order_witness) {
        const auto& [t, w] = *rep.order_witness;
        out << "witness     target " << g.label(t) << ": " << labelled(g, w) << "\n";
      }
      out << "  target  max     tested      witness\n";
      for (const auto& t : rep.per_target) {
        print_target_row(out, g, t, !flags.no_timings);
      }
      if (!flags.no_timings) {
        out << "elapsed     " << std::fixed << std::setprecision(2) << rep.elapsed_seconds << "s\n";
      }
    }
    return expect_result(expect, rep.class_zero ? "class0" : "not-class0", err);
  }
};

struct AuditCmd {
  GraphSource src;
  CommonFlags flags;
  std::string suite_file, expect;
  bool builtin = false;
  int min_total = 0, max_total = -1;
  std::size_t keep = 10;

  int run(std::ostream& out, std::ostream& err) {
    if (builtin == !suite_file.empty()) {
      throw CLI::ValidationError("suite", "give exactly one of --builtin-j3 and --suite");
    }
    LoadedGraph lg = src.given() || !builtin ? load(src, err) : LoadedGraph{flower_snark(3), "flower:3"};
    const Graph& g = lg.graph;
    const std::vector<BoundSuite> suites =
        builtin ? builtin_j3_suite() : parse_suites(read_json_file(resolve_data_file(suite_file, src.dir())), g);

    AuditOptions ao;
    ao.scan = flags.scan_options();
    ao.violations_kept_per_bound = keep;
    const TotalRange range{min_total, max_total};

    bool passed = true;
    Json reports = Json::array();
    for (const auto& s : suites) {
      const AuditReport rep = check_suite(g, s, range, ao);
      passed = passed && rep.passed;
      if (flags.json) {
        reports.push_back(to_json(g, rep, flags.report_options()));
        continue;
      }
      out << "suite " << rep.suite << " (target " << g.label(rep.target) << "): " << (rep.passed ? "PASS" : "FAIL")
          << "  totals " << rep.first_total << ".." << rep.last_total << ", " << rep.unsolvable << " unsolvable of "
          << rep.configurations_scanned << " scanned";
      if (!flags.no_timings) {
        out << ", " << std::fixed << std::setprecision(2) << rep.elapsed_seconds << "s";
      }
      out << "\n";
      for (std::size_t b = 0; b < rep.bounds.size(); ++b) {
        out << "  " << std::left << std::setw(28) << rep.bounds[b].to_string() << " max lhs " << std::setw(4)
            << rep.tallies[b].max_lhs << " violations " << rep.tallies[b].violations << "\n";
      }
      for (const auto& v : rep.violations) {
        out << "    violates " << rep.bounds[v.bound].to_string() << " (lhs " << v.lhs << "): "
            << labelled(g, v.configuration) << "\n";
      }
    }
    if (flags.json) {
      emit(out, Json{{"graph", lg.id}, {"passed", passed}, {"suites", reports}});
    }
    return expect_result(expect, passed ? "pass" : "fail", err);
  }
};

struct GenCmd {
  std::string spec;
  CommonFlags flags;
  bool emit_g6 = false;

  int run(std::ostream& out, std::ostream&) {
    const Graph g = generate(spec);
    const std::string g6 = encode_graph6(g);
    if (emit_g6) {
      out << g6 << "\n";
      return kOk;
    }
    const GraphMetrics m = metrics(g);
    if (flags.json) {
      Json j{{"spec", spec},        {"order", g.order()},      {"size", g.size()},
             {"diameter", m.diameter}, {"girth", m.girth ? Json(*m.girth) : Json(nullptr)},
             {"degrees", m.degree_sequence}, {"labels", g.labels()}, {"g6", g6}};
      emit(out, j);
    } else {
      out << "spec      " << spec << "\n"
          << "order     " << g.order() << "\n"
          << "size      " << g.size() << "\n"
          << "diameter  " << m.diameter << "\n"
          << "girth     " << (m.girth ? std::to_string(*m.girth) : "inf") << "\n"
          << "g6        " << g6 << "\n";
    }
    return kOk;
  }
};

struct OrbitsCmd {
  GraphSource src;
  CommonFlags flags;

  int run(std::ostream& out, std::ostream& err) {
    LoadedGraph lg = load(src, err);
    const Graph& g = lg.graph;
    const OrbitPartition p = vertex_orbits(g);
    if (flags.json) {
      Json orbits = Json::array();
      for (int o = 0; o < p.orbit_count(); ++o) {
        Json members = Json::array();
        for (Vertex v : p.members(o)) {
          members.push_back(g.label(v));
        }
        orbits.push_back({{"representative", g.label(p.representatives[static_cast<std::size_t>(o)])},
                          {"members", members}});
      }
      emit(out, Json{{"graph", lg.id}, {"orbitCount", p.orbit_count()}, {"orbits", orbits}});
    } else {
      out << "graph     " << lg.id << "\n" << p.orbit_count() << " orbit(s)\n";
      for (int o = 0; o < p.orbit_count(); ++o) {
        out << "  " << g.label(p.representatives[static_cast<std::size_t>(o)]) << ":";
        for (Vertex v : p.members(o)) {
          out << " " << g.label(v);
        }
        out << "\n";
      }
    }
    return kOk;
  }
};

struct FetchCmd {
  int id = 0;
  CommonFlags flags;
  std::string check_fixture, fixtures_dir;

  int run(std::ostream& out, std::ostream& err) {
    const FetchResult r = fetch_graph(id, HogOptions::from_env(), err);
    const GraphMetrics m = metrics(r.graph);
    std::optional<bool> matches;
    if (!check_fixture.empty()) {
      const fs::path dir = fixtures_dir.empty() ? default_fixtures_dir() : fs::path(fixtures_dir);
      matches = load_fixture(check_fixture, dir).same_adjacency(r.graph);
    }
    if (flags.json) {
      Json j{{"id", id},
             {"g6", r.g6},
             {"order", r.graph.order()},
             {"size", r.graph.size()},
             {"diameter", m.diameter},
             {"girth", m.girth ? Json(*m.girth) : Json(nullptr)},
             {"degrees", m.degree_sequence},
             {"cacheFile", r.cache_file.string()}};
      if (matches) {
        j["fixture"] = check_fixture;
        j["fixtureMatches"] = *matches;
      }
      emit(out, j);
    } else {
      out << "id        " << id << "\n"
          << "g6        " << r.g6 << "\n"
          << "order     " << r.graph.order() << "\n"
          << "size      " << r.graph.size() << "\n"
          << "diameter  " << m.diameter << "\n"
          << "girth     " << (m.girth ? std::to_string(*m.girth) : "inf") << "\n"
          << "cache     " << r.cache_file.string() << (r.from_cache ? " (hit)" : " (stored)") << "\n";
      if (matches) {
        out << "fixture   " << check_fixture << (*matches ? " matches" : " DIFFERS") << "\n";
      }
    }
    return matches.value_or(true) ? kOk : kExpectMismatch;
  }
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph pebbling toolkit: solvability, pebbling numbers, Class 0 checks and bound audits", "pebble"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "pebble 1.0.0");

  SolveCmd solve;
  auto* s = app.add_subcommand("solve", "decide r-solvability of one configuration");
  solve.src.add_to(s);
  solve.flags.add_output(s);
  s->add_option("--memo-budget", solve.flags.memo_budget, "refuted-state memo entries");
  s->add_option("--target", solve.target, "target label or index");
  auto* cfg = s->add_option("--config", solve.config, "configuration JSON file");
  auto* cnt = s->add_option("--counts", solve.counts, "comma-separated counts in vertex order");
  cfg->excludes(cnt);
  s->add_option("--expect", solve.expect)->check(CLI::IsMember({"solvable", "unsolvable"}));

  WitnessCmd witness;
  auto* w = app.add_subcommand("witness", "lexicographically least unsolvable configuration of a given size");
  witness.src.add_to(w);
  witness.flags.add_output(w);
  witness.flags.add_search(w);
  w->add_option("--target", witness.target, "target label or index")->required();
  w->add_option("--total", witness.total, "pebble count (default: n)");
  w->add_option("--expect", witness.expect)->check(CLI::IsMember({"found", "none"}));

  PiCmd pi;
  auto* p = app.add_subcommand("pi", "pebbling number, or target pebbling number with --target");
  pi.src.add_to(p);
  pi.flags.add_output(p);
  pi.flags.add_search(p);
  p->add_option("--target", pi.target, "single target label or index");
  p->add_option("--expect", pi.expect, "expected value");

  ClassZeroCmd class0;
  auto* c0 = app.add_subcommand("class0", "decide whether pi(G) = n(G)");
  class0.src.add_to(c0);
  class0.flags.add_output(c0);
  class0.flags.add_search(c0);
  c0->add_option("--expect", class0.expect)->check(CLI::IsMember({"class0", "not-class0"}));

  AuditCmd audit;
  auto* a = app.add_subcommand("audit", "check linear bounds over every capped unsolvable configuration");
  audit.src.add_to(a);
  audit.flags.add_output(a);
  audit.flags.add_search(a);
  auto* bi = a->add_flag("--builtin-j3", audit.builtin, "the built-in J3 suites (graph defaults to flower:3)");
  auto* sf = a->add_option("--suite", audit.suite_file, "bound-suite JSON file");
  bi->excludes(sf);
  a->add_option("--min-total", audit.min_total, "lowest total scanned")->check(CLI::NonNegativeNumber);
  a->add_option("--max-total", audit.max_total, "highest total scanned (default: cap sum)");
  a->add_option("--violations", audit.keep, "violating configurations kept per bound");
  a->add_option("--expect", audit.expect)->check(CLI::IsMember({"pass", "fail"}));

  GenCmd gen;
  auto* gn = app.add_subcommand("gen", "generate a named graph");
  gn->add_option("spec", gen.spec, "flower:M, petersen, complete:N, path:N, cycle:N")->required();
  gn->add_flag("--emit-g6", gen.emit_g6, "print only the graph6 line");
  gen.flags.add_output(gn);

  OrbitsCmd orbits;
  auto* o = app.add_subcommand("orbits", "vertex orbits of the automorphism group");
  orbits.src.add_to(o);
  orbits.flags.add_output(o);

  FetchCmd fetch;
  auto* f = app.add_subcommand("fetch", "download a House of Graphs entry into the cache");
  f->add_option("id", fetch.id, "numeric graph id")->required()->check(CLI::PositiveNumber);
  f->add_option("--check-fixture", fetch.check_fixture, "compare adjacency with a shipped fixture");
  f->add_option("--fixtures-dir", fetch.fixtures_dir, "fixture directory");
  fetch.flags.add_output(f);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (s->parsed()) {
      return solve.run(out, err);
    }
    if (w->parsed()) {
      return witness.run(out, err);
    }
    if (p->parsed()) {
      return pi.run(out, err);
    }
    if (c0->parsed()) {
      return class0.run(out, err);
    }
    if (a->parsed()) {
      return audit.run(out, err);
    }
    if (gn->parsed()) {
      return gen.run(out, err);
    }
    if (o->parsed()) {
      return orbits.run(out, err);
    }
    if (f->parsed()) {
      return fetch.run(out, err);
    }
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const FetchError& e) {
    err << "error: " << e.what() << "\n";
    return kNetwork;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

} // namespace pebble::cli
