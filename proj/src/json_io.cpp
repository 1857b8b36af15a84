#include "pebble/json_io.hpp"

#include "pebble/errors.hpp"

namespace pebble {

namespace {

std::vector<int> read_counts(const Json& j) {
  if (!j.is_array()) {
    throw InputError("\"counts\" must be an array of non-negative integers");
  }
  std::vector<int> counts;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 0) {
      throw InputError("\"counts\" must be an array of non-negative integers");
    }
    counts.push_back(x.get<int>());
  }
  return counts;
}

Vertex read_vertex(const Json& x, const Graph& g) {
  if (x.is_number_integer()) {
    const int v = x.get<int>();
    if (v < 0 || v >= g.order()) {
      throw InputError("vertex index " + std::to_string(v) + " out of range");
    }
    return v;
  }
  if (x.is_string()) {
    if (auto v = g.resolve(x.get<std::string>())) {
      return *v;
    }
    throw InputError("unknown vertex label '" + x.get<std::string>() + "'");
  }
  throw InputError("vertex must be a label or an index");
}

Json labelled_counts(const Graph& g, const Configuration& c) {
  Json out = Json::object();
  for (Vertex v = 0; v < c.size(); ++v) {
    if (c[v] != 0) {
      out[g.label(v)] = c[v];
    }
  }
  return out;
}

} // namespace

ConfigDocument parse_config_document(const Json& j) {
  if (!j.is_object() || !j.contains("counts")) {
    throw InputError("configuration JSON must be an object with \"counts\"");
  }
  ConfigDocument doc;
  doc.configuration = Configuration(read_counts(j.at("counts")));
  if (j.contains("graph")) {
    const auto& gj = j.at("graph");
    if (gj.is_string()) {
      doc.graph_id = gj.get<std::string>();
    } else if (gj.is_object() && gj.contains("g6")) {
      doc.graph_g6 = gj.at("g6").get<std::string>();
      if (gj.contains("labels")) {
        doc.graph_labels = gj.at("labels").get<std::vector<std::string>>();
      }
    } else {
      throw InputError("\"graph\" must be a source id or {\"g6\": ...}");
    }
  }
  if (j.contains("target")) {
    const auto& t = j.at("target");
    doc.target = t.is_string() ? t.get<std::string>() : std::to_string(t.get<int>());
  }
  return doc;
}

Json to_json(const ConfigDocument& doc) {
  Json j = Json::object();
  if (doc.graph_id) {
    j["graph"] = *doc.graph_id;
  } else if (doc.graph_g6) {
    Json gj = {{"g6", *doc.graph_g6}};
    if (!doc.graph_labels.empty()) {
      gj["labels"] = doc.graph_labels;
    }
    j["graph"] = gj;
  }
  if (doc.target) {
    j["target"] = *doc.target;
  }
  j["counts"] = to_json(doc.configuration);
  return j;
}

Json to_json(const Configuration& c) { return Json(std::vector<int>(c.counts().begin(), c.counts().end())); }

Json to_json(const SearchStats& s) {
  return Json{{"nodesExpanded", s.nodes_expanded},
              {"memoHits", s.memo_hits},
              {"prunedByWeight", s.pruned_by_weight},
              {"prunedByCap", s.pruned_by_cap},
              {"maxDepth", s.max_depth}};
}

Json certificate_json(const Graph& g, Target r, const SolveOutcome& outcome) {
  Json moves = Json::array();
  for (const auto& m : outcome.moves) {
    moves.push_back(Json::array({m.from, m.to}));
  }
  return Json{{"target", r.vertex},
              {"targetLabel", g.label(r.vertex)},
              {"moves", moves},
              {"verdict", to_string(outcome.verdict)},
              {"stats", to_json(outcome.stats)}};
}

Json to_json(const Graph& g, const LevelResult& level) {
  Json j{{"total", level.total}, {"levelSize", level.level_size}, {"tested", level.tested}};
  if (level.witness) {
    j["witness"] = to_json(*level.witness);
    j["witnessLabels"] = labelled_counts(g, *level.witness);
    j["witnessRank"] = level.witness_rank;
  } else {
    j["witness"] = nullptr;
  }
  if (level.filtered_verified != 0) {
    j["filteredVerified"] = level.filtered_verified;
  }
  return j;
}

Json to_json(const Graph& g, const TargetReport& report, const ReportOptions& opts) {
  Json levels = Json::array();
  for (const auto& l : report.levels) {
    levels.push_back(to_json(g, l));
  }
  Json j{{"target", report.target},
         {"targetLabel", g.label(report.target)},
         {"maxUnsolvable", report.max_unsolvable},
         {"witness", to_json(report.witness)},
         {"witnessLabels", labelled_counts(g, report.witness)},
         {"configsTested", report.configs_tested},
         {"stats", to_json(report.stats)},
         {"levels", levels}};
  if (opts.timings) {
    j["elapsedSeconds"] = report.elapsed_seconds;
  }
  return j;
}

Json to_json(const Graph& g, const ClassZeroReport& report, const ReportOptions& opts) {
  Json per_target = Json::array();
  for (const auto& t : report.per_target) {
    per_target.push_back(to_json(g, t, opts));
  }
  Json j{{"graphId", report.graph_id},
         {"order", report.order},
         {"pebblingNumber", report.pebbling_number},
         {"classZero", report.class_zero},
         {"orbitsUsed", report.orbits_used},
         {"enumeration",
          {{"capFilter", report.options.cap_filter},
           {"scan", to_string(report.options.direction)},
           {"targetRestriction", report.orbits_used ? "orbit-representatives" : "all-vertices"},
           {"memoBudget", report.options.solver.memo_budget}}}};
  if (report.order_witness) {
    const auto& [t, w] = *report.order_witness;
    j["orderWitness"] = {{"target", t},
                         {"targetLabel", g.label(t)},
                         {"counts", to_json(w)},
                         {"countsByLabel", labelled_counts(g, w)}};
  } else {
    j["orderWitness"] = nullptr;
  }
  j["perTarget"] = per_target;
  if (opts.timings) {
    j["elapsedSeconds"] = report.elapsed_seconds;
  }
  return j;
}

Json to_json(const Graph& g, const AuditReport& report, const ReportOptions& opts) {
  Json bounds = Json::array();
  for (std::size_t b = 0; b < report.bounds.size(); ++b) {
    const auto& bound = report.bounds[b];
    Json terms = Json::array();
    for (const auto& [coef, expr] : bound.terms) {
      terms.push_back(Json::array({coef, expr}));
    }
    Json violations = Json::array();
    for (const auto& v : report.violations) {
      if (v.bound == b) {
        violations.push_back({{"counts", to_json(v.configuration)},
                              {"countsByLabel", labelled_counts(g, v.configuration)},
                              {"lhs", v.lhs}});
      }
    }
    bounds.push_back({{"bound", bound.to_string()},
                      {"description", bound.description},
                      {"terms", terms},
                      {"rhs", bound.rhs},
                      {"maxLhs", report.tallies[b].max_lhs},
                      {"violationCount", report.tallies[b].violations},
                      {"violations", violations}});
  }
  Json j{{"suite", report.suite},
         {"target", report.target},
         {"targetLabel", g.label(report.target)},
         {"passed", report.passed},
         {"boundsChecked", report.bounds_checked},
         {"configurationsScanned", report.configurations_scanned},
         {"unsolvable", report.unsolvable},
         {"solvable", report.solvable},
         {"capViolations", report.cap_violations},
         {"totals", {{"first", report.first_total}, {"last", report.last_total}}},
         {"stoppedOnEmptyLevel", report.stopped_on_empty_level},
         {"bounds", bounds}};
  if (opts.timings) {
    j["elapsedSeconds"] = report.elapsed_seconds;
  }
  return j;
}

std::vector<BoundSuite> parse_suites(const Json& j, const Graph& g) {
  std::vector<BoundSuite> out;
  auto parse_one = [&](const Json& s) {
    if (!s.is_object() || !s.contains("target") || !s.contains("sets") || !s.contains("bounds")) {
      throw InputError("bound suite needs \"target\", \"sets\" and \"bounds\"");
    }
    BoundSuite suite;
    const auto& t = s.at("target");
    suite.target = t.is_string() ? t.get<std::string>() : std::to_string(t.get<int>());
    suite.system.name = s.value("name", "suite-" + suite.target);
    for (const auto& [name, members] : s.at("sets").items()) {
      if (name.find('|') != std::string::npos) {
        throw InputError("set names may not contain '|': " + name);
      }
      auto& vs = suite.system.sets[name];
      for (const auto& m : members) {
        vs.push_back(read_vertex(m, g));
      }
    }
    for (const auto& b : s.at("bounds")) {
      LinearBound bound;
      for (const auto& term : b.at("terms")) {
        if (!term.is_array() || term.size() != 2) {
          throw InputError("bound term must be [coefficient, set]");
        }
        bound.terms.emplace_back(term.at(0).get<int>(), term.at(1).get<std::string>());
      }
      bound.rhs = b.at("rhs").get<int>();
      bound.description = b.value("description", bound.to_string());
      suite.bounds.push_back(std::move(bound));
    }
    validate(g, suite);
    out.push_back(std::move(suite));
  };
  try {
    if (j.is_array()) {
      for (const auto& s : j) {
        parse_one(s);
      }
    } else {
      parse_one(j);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed bound suite: ") + e.what());
  }
  return out;
}

Json to_json(const Graph& g, const BoundSuite& suite) {
  Json sets = Json::object();
  for (const auto& [name, members] : suite.system.sets) {
    Json labels = Json::array();
    for (Vertex v : members) {
      labels.push_back(g.label(v));
    }
    sets[name] = labels;
  }
  Json bounds = Json::array();
  for (const auto& b : suite.bounds) {
    Json terms = Json::array();
    for (const auto& [coef, expr] : b.terms) {
      terms.push_back(Json::array({coef, expr}));
    }
    bounds.push_back({{"terms", terms}, {"rhs", b.rhs}, {"description", b.description}});
  }
  return Json{{"name", suite.system.name}, {"target", suite.target}, {"sets", sets}, {"bounds", bounds}};
}

} // namespace pebble
