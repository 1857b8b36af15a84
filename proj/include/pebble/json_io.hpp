#pragma once

#include "pebble/audit.hpp"
#include "pebble/configuration.hpp"
#include "pebble/enumeration.hpp"
#include "pebble/graph.hpp"
#include "pebble/solver.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace pebble {

using Json = nlohmann::ordered_json;

/// `{"graph": <id or inline>, "counts": [...]}`, optionally with "target".
/// "graph" is either a string source id ("hog1395", "flower:3") or an object
/// `{"g6": "...", "labels": [...]}`.
struct ConfigDocument {
  std::optional<std::string> graph_id;
  std::optional<std::string> graph_g6;
  std::vector<std::string> graph_labels;
  std::optional<std::string> target;
  Configuration configuration;
};

ConfigDocument parse_config_document(const Json& j);
Json to_json(const ConfigDocument& doc);

Json to_json(const Configuration& c);
Json to_json(const SearchStats& s);

/// `{"target": v, "moves": [[from,to],...], "verdict": ..., "stats": {...}}`
Json certificate_json(const Graph& g, Target r, const SolveOutcome& outcome);

struct ReportOptions {
  bool timings = true;
};

Json to_json(const Graph& g, const LevelResult& level);
Json to_json(const Graph& g, const TargetReport& report, const ReportOptions& opts = {});
Json to_json(const Graph& g, const ClassZeroReport& report, const ReportOptions& opts = {});
Json to_json(const Graph& g, const AuditReport& report, const ReportOptions& opts = {});

/// Bound-suite file: one suite object or an array of them:
/// `{"target": "z0", "sets": {"A": [...]}, "bounds": [{"terms": [[1,"F"],[2,"A|B"]], "rhs": 14}]}`.
/// Set members are labels (strings) or indices (numbers).
std::vector<BoundSuite> parse_suites(const Json& j, const Graph& g);
Json to_json(const Graph& g, const BoundSuite& suite);

} // namespace pebble
