#pragma once

#include "pebble/configuration.hpp"
#include "pebble/enumeration.hpp"
#include "pebble/graph.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace pebble {

/// Named vertex subsets for one (graph, target) context. A set expression
/// "A|B" denotes the union of named sets.
struct SetSystem {
  std::string name;
  std::map<std::string, std::vector<Vertex>> sets;

  /// Resolves "A" or "A|B|..." to a sorted, duplicate-free vertex list.
  /// Throws InputError on an unknown set name.
  std::vector<Vertex> resolve(std::string_view expr) const;
};

/// sum(coefficient * C(set)) <= rhs
struct LinearBound {
  std::vector<std::pair<int, std::string>> terms;
  int rhs = 0;
  std::string description;

  /// "C(F) + 2 C(A|B) <= 14"
  std::string to_string() const;
};

/// A set system with its target and the bounds audited against it.
struct BoundSuite {
  std::string target; ///< label or index, resolved against the graph
  SetSystem system;
  std::vector<LinearBound> bounds;
};

/// Throws InputError when a set references a missing vertex, a bound
/// references an undefined set, or a coefficient is not positive.
void validate(const Graph& g, const BoundSuite& suite);

/// The three J_3 suites (targets z0, x0, v0) of the Class 0 proof, with the
/// single-set and union caps that accompany them.
std::vector<BoundSuite> builtin_j3_suite();

struct TotalRange {
  int min = 0;
  int max = -1; ///< negative: up to the cap sum
};

struct BoundViolation {
  std::size_t bound = 0;
  Configuration configuration;
  int lhs = 0;
};

struct BoundTally {
  std::uint64_t violations = 0;
  int max_lhs = -1; ///< largest left-hand side seen over unsolvable configurations
};

struct AuditReport {
  std::string suite;
  Vertex target = 0;
  std::vector<LinearBound> bounds;
  std::vector<BoundTally> tallies;          ///< one per bound
  std::vector<BoundViolation> violations;   ///< first few per bound, in scan order
  std::uint64_t bounds_checked = 0;         ///< bound evaluations performed
  std::uint64_t configurations_scanned = 0;
  std::uint64_t unsolvable = 0;
  std::uint64_t solvable = 0;
  std::uint64_t cap_violations = 0;         ///< unsolvable configurations exceeding 2^d - 1 somewhere
  int first_total = 0;
  int last_total = 0;                       ///< last level scanned
  bool stopped_on_empty_level = false;
  bool passed = false;
  double elapsed_seconds = 0.0;
};

struct AuditOptions {
  ScanOptions scan;
  /// Stop after the first level without unsolvable configurations; exact,
  /// because no higher level can contain one.
  bool stop_on_empty_level = true;
  std::size_t violations_kept_per_bound = 10;
};

/// Enumerates every capped r-unsolvable configuration with total in `range`
/// and evaluates each bound on it.
AuditReport check_bound(const Graph& g, Target r, const SetSystem& sys, const std::vector<LinearBound>& bounds,
                        TotalRange range = {}, const AuditOptions& opts = {});

/// Single-threaded reference implementation of check_bound.
AuditReport check_bound_serial(const Graph& g, Target r, const SetSystem& sys, const std::vector<LinearBound>& bounds,
                               TotalRange range = {}, const AuditOptions& opts = {});

/// check_bound for a suite, resolving its target against the graph.
AuditReport check_suite(const Graph& g, const BoundSuite& suite, TotalRange range = {},
                        const AuditOptions& opts = {});

} // namespace pebble
