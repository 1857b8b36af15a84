#pragma once

#include "pebble/configuration.hpp"
#include "pebble/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace pebble {

/// Per-vertex ceiling of the packed memo encoding (6 bits per vertex).
inline constexpr int kMaxPackedCount = 63;
inline constexpr std::size_t kDefaultMemoBudget = std::size_t{1} << 24;

enum class Verdict { Solvable, Unsolvable };

std::string to_string(Verdict v);

struct SearchStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t pruned_by_weight = 0;
  std::uint64_t pruned_by_cap = 0; ///< states settled by the 2^d cap test
  int max_depth = 0;

  SearchStats& operator+=(const SearchStats& o);
  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

struct SolveOutcome {
  Verdict verdict = Verdict::Unsolvable;
  std::vector<Move> moves; ///< certificate; empty when unsolvable
  SearchStats stats;

  bool solvable() const { return verdict == Verdict::Solvable; }
};

struct SolverOptions {
  std::size_t memo_budget = kDefaultMemoBudget; ///< refuted states kept per call; new ones dropped when full
};

/// Exhaustive r-solvability search bound to one (graph, target) pair.
///
/// Depth-first over the move tree with an explicit stack. Before a state is
/// expanded it is settled as solvable by the cap test, cut when its weight is
/// below 1, or skipped when it is already in the refuted-state memo. Children
/// are tried in ascending (from, to) order so certificates are deterministic.
/// The memo is reset on every solve() call; an instance may be reused for many
/// configurations but not shared between threads.
class Solver {
public:
  /// Throws BudgetError when the target's eccentricity exceeds the exact
  /// weight budget.
  Solver(const Graph& g, Target r, SolverOptions opts = {});
  ~Solver();
  Solver(Solver&&) noexcept;
  Solver& operator=(Solver&&) noexcept;

  /// Throws MoveError on a size mismatch and BudgetError when a count does
  /// not fit the packed encoding.
  SolveOutcome solve(const Configuration& c);

  const Graph& graph() const;
  Target target() const;

  struct Impl; // search state, defined in solver.cpp

private:
  std::unique_ptr<Impl> impl_;
};

SolveOutcome is_solvable(const Graph& g, Target r, const Configuration& c, SolverOptions opts = {});

struct CertificateCheck {
  bool ok = false;
  int failing_step = -1; ///< index of the first illegal move, or moves.size() when the target stays empty
  std::string diagnostic;

  explicit operator bool() const { return ok; }
};

/// Replays `moves` from `c`; accepts iff every move is legal and the target
/// ends with at least one pebble. Shares no code with the search.
CertificateCheck verify_certificate(const Graph& g, Target r, const Configuration& c, const std::vector<Move>& moves);

} // namespace pebble
