#pragma once

#include "pebble/configuration.hpp"
#include "pebble/graph.hpp"
#include "pebble/solver.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pebble {

/// Configurations with a fixed total and per-vertex caps.
struct EnumSpec {
  std::vector<int> caps;
  int total = 0;
};

/// Counting table for capped compositions; supports lexicographic rank and
/// unrank so that a level can be split into contiguous shards.
class CappedCompositions {
public:
  /// Throws BudgetError when the count overflows 64 bits.
  explicit CappedCompositions(EnumSpec spec);

  std::uint64_t count() const { return count_; }
  const EnumSpec& spec() const { return spec_; }

  /// The k-th configuration in lexicographic order, k < count().
  std::vector<int> unrank(std::uint64_t k) const;

  /// Advances `counts` to its lexicographic successor within the same
  /// family; false when `counts` is the last one.
  static bool next(std::vector<int>& counts, std::span<const int> caps);

private:
  std::uint64_t ways(std::size_t from, int remaining) const;

  EnumSpec spec_;
  std::vector<std::uint64_t> table_; // table_[i * (total + 1) + s]: ways to place s over vertices i..n-1
  std::uint64_t count_ = 0;
};

/// Streams the family in lexicographic order of the counts vector.
class CappedEnumerator {
public:
  explicit CappedEnumerator(EnumSpec spec);
  /// Writes the next configuration; false when exhausted.
  bool next(std::vector<int>& out);

private:
  EnumSpec spec_;
  std::vector<int> current_;
  bool started_ = false;
  bool done_ = false;
};

/// Whole family, in order. For small families and tests.
std::vector<Configuration> enumerate_capped(const EnumSpec& spec);

/// Caps for target r: 0 at r and 2^d(v,r) - 1 elsewhere.
EnumSpec target_family(const Graph& g, Target r, int total);

enum class ScanDirection { Upward, Downward };

std::string to_string(ScanDirection d);

struct ScanOptions {
  int jobs = 1;                       ///< worker threads for level scans
  ScanDirection direction = ScanDirection::Upward;
  bool cap_filter = true;             ///< false: enumerate every composition and check the excluded ones are solvable
  bool use_orbits = true;             ///< restrict targets to orbit representatives
  std::uint64_t chunk_size = 1024;    ///< shard length; part of the determinism contract only through results
  SolverOptions solver;
};

/// Outcome of scanning one level (one total) for its lexicographically least
/// unsolvable configuration.
struct LevelResult {
  int total = 0;
  std::uint64_t level_size = 0;
  std::uint64_t tested = 0;              ///< configurations up to and including the witness
  std::optional<Configuration> witness;
  std::uint64_t witness_rank = 0;
  std::uint64_t filtered_verified = 0;   ///< excluded configurations confirmed solvable (cap_filter off)
  SearchStats stats;
};

/// Serial reference scan of one level.
LevelResult scan_level_serial(const Graph& g, Target r, int total, const ScanOptions& opts);

/// Sharded scan of one level: fixed-size lexicographic chunks distributed
/// over OpenMP threads, reduced by minimum rank. Result is independent of
/// the thread count.
LevelResult scan_level(const Graph& g, Target r, int total, const ScanOptions& opts);

struct TargetReport {
  Vertex target = 0;
  int max_unsolvable = 0;
  Configuration witness;                 ///< lexicographically least at max_unsolvable
  std::uint64_t configs_tested = 0;
  SearchStats stats;
  std::vector<LevelResult> levels;       ///< every level scanned, in scan order
  double elapsed_seconds = 0.0;

  /// Witness recorded for a given total, if that level was scanned and had one.
  std::optional<Configuration> witness_at(int total) const;
};

struct ClassZeroReport {
  std::string graph_id;
  int order = 0;
  int pebbling_number = 0;
  bool class_zero = false;
  bool orbits_used = false;
  std::vector<TargetReport> per_target;
  /// When not Class 0: (target, unsolvable configuration with exactly n pebbles).
  std::optional<std::pair<Vertex, Configuration>> order_witness;
  ScanOptions options;
  double elapsed_seconds = 0.0;
};

/// Largest total admitting an r-unsolvable configuration. The upward scan
/// starts at n - 1 (one pebble on every other vertex is always unsolvable)
/// and stops at the first level without an unsolvable configuration; the
/// downward scan starts at the cap sum and stops at the first level with
/// one. Both are exact because removing a pebble preserves unsolvability.
TargetReport max_unsolvable(const Graph& g, Target r, const ScanOptions& opts = {});

/// pi(G) = 1 + max over targets of max_unsolvable.
ClassZeroReport pebbling_number(const Graph& g, const ScanOptions& opts = {}, std::string graph_id = {});

/// Same as pebbling_number; additionally guarantees `order_witness` when the
/// graph is not Class 0.
ClassZeroReport is_class_zero(const Graph& g, const ScanOptions& opts = {}, std::string graph_id = {});

/// Lexicographically least r-unsolvable configuration with exactly t pebbles.
/// Witnesses are re-checked by a fresh solver before being returned.
std::optional<Configuration> find_unsolvable_witness(const Graph& g, Target r, int total,
                                                     const ScanOptions& opts = {});

} // namespace pebble
