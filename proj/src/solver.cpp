#include "pebble/solver.hpp"

#include "pebble/errors.hpp"

#include <algorithm>
#include <array>

namespace pebble {

std::string to_string(Verdict v) { return v == Verdict::Solvable ? "solvable" : "unsolvable"; }

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  nodes_expanded += o.nodes_expanded;
  memo_hits += o.memo_hits;
  pruned_by_weight += o.pruned_by_weight;
  pruned_by_cap += o.pruned_by_cap;
  max_depth = std::max(max_depth, o.max_depth);
  return *this;
}

namespace {

constexpr int kCountsPerWord = 10;
constexpr int kBitsPerCount = 6;
constexpr std::uint64_t kCountMask = (std::uint64_t{1} << kBitsPerCount) - 1;
// Scaled weights sum counts * 2^(ecc - d); 63 * 62 * 2^50 stays below 2^64.
constexpr int kMaxScaledEccentricity = 50;

template <int W>
using PackedState = std::array<std::uint64_t, W>;

template <int W>
std::uint64_t hash_state(const PackedState<W>& s) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t w : s) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= h >> 31;
    h *= 0xbf58476d1ce4e5b9ULL;
  }
  return h ^ (h >> 29);
}

// Open-addressing set of refuted states. Generation stamps make reset O(1)
// so one table serves many solve() calls.
template <int W>
class RefutedSet {
public:
  explicit RefutedSet(std::size_t budget) : budget_(budget) {}

  void reset() {
    ++generation_;
    size_ = 0;
    if (generation_ == 0) {
      for (auto& s : slots_) {
        s.generation = 0;
      }
      generation_ = 1;
    }
  }

  bool contains(const PackedState<W>& key) const {
    if (slots_.empty()) {
      return false;
    }
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t i = hash_state<W>(key) & mask;; i = (i + 1) & mask) {
      const auto& s = slots_[i];
      if (s.generation != generation_) {
        return false;
      }
      if (s.key == key) {
        return true;
      }
    }
  }

  void insert(const PackedState<W>& key) {
    if (size_ >= budget_) {
      return;
    }
    if ((size_ + 1) * 2 > slots_.size()) {
      grow();
    }
    place(key);
    ++size_;
  }

private:
  struct Slot {
    PackedState<W> key{};
    std::uint32_t generation = 0;
  };

  void place(const PackedState<W>& key) {
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t i = hash_state<W>(key) & mask;; i = (i + 1) & mask) {
      auto& s = slots_[i];
      if (s.generation != generation_) {
        s.key = key;
        s.generation = generation_;
        return;
      }
      if (s.key == key) {
        return;
      }
    }
  }

  void grow() {
    std::vector<Slot> old = std::move(slots_);
    slots_.assign(old.empty() ? 1024 : old.size() * 2, Slot{});
    for (const auto& s : old) {
      if (s.generation == generation_) {
        place(s.key);
      }
    }
  }

  std::size_t budget_;
  std::size_t size_ = 0;
  std::uint32_t generation_ = 1;
  std::vector<Slot> slots_;
};

} // namespace

struct Solver::Impl {
  virtual ~Impl() = default;
  virtual SolveOutcome solve(const Configuration& c) = 0;

  Impl(const Graph& g, Target r) : graph(g), target(r), dist(distances_from(g, r.vertex)) {}

  Graph graph;
  Target target;
  std::vector<int> dist;
};

namespace {

template <int W>
class SearchImpl final : public Solver::Impl {
public:
  SearchImpl(const Graph& g, Target r, SolverOptions opts) : Impl(g, r), memo_(opts.memo_budget) {
    const int n = g.order();
    ecc_ = *std::max_element(dist.begin(), dist.end());
    if (ecc_ > kMaxScaledEccentricity) {
      throw BudgetError("target eccentricity " + std::to_string(ecc_) + " exceeds the exact weight budget of " +
                        std::to_string(kMaxScaledEccentricity));
    }
    scale_.resize(static_cast<std::size_t>(n));
    threshold_.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      const int d = dist[static_cast<std::size_t>(v)];
      scale_[static_cast<std::size_t>(v)] = std::uint64_t{1} << (ecc_ - d);
      // Counts never exceed 64 here, so any threshold above that is unreachable.
      threshold_[static_cast<std::size_t>(v)] = d == 0 ? 1 : (d > 6 ? 65 : (1 << d));
    }
    for (int v = 0; v < n; ++v) {
      adjacency_.emplace_back(g.neighbors(v).begin(), g.neighbors(v).end());
    }
  }

  SolveOutcome solve(const Configuration& c) override {
    const int n = graph.order();
    if (c.size() != n) {
      throw MoveError("configuration has " + std::to_string(c.size()) + " entries, graph has " + std::to_string(n));
    }
    SolveOutcome out;
    PackedState<W> root{};
    std::uint64_t root_weight = 0;
    for (int v = 0; v < n; ++v) {
      if (c[v] > kMaxPackedCount) {
        throw BudgetError("count " + std::to_string(c[v]) + " at vertex " + std::to_string(v) +
                          " exceeds the packed limit of " + std::to_string(kMaxPackedCount));
      }
      set(root, v, static_cast<std::uint64_t>(c[v]));
      root_weight += static_cast<std::uint64_t>(c[v]) * scale_[static_cast<std::size_t>(v)];
    }

    for (int v = 0; v < n; ++v) {
      if (c[v] >= threshold_[static_cast<std::size_t>(v)]) {
        out.verdict = Verdict::Solvable;
        out.stats.pruned_by_cap = v == target.vertex ? 0 : 1;
        if (v != target.vertex) {
          out.moves = transport_moves(graph, dist, v);
        }
        return out;
      }
    }
    const std::uint64_t one = std::uint64_t{1} << ecc_;
    if (root_weight < one) {
      out.stats.pruned_by_weight = 1;
      return out;
    }

    memo_.reset();
    stack_.clear();
    stack_.push_back(Frame{root, root_weight, 0, 0, {}});
    out.stats.nodes_expanded = 1;

    while (!stack_.empty()) {
      Frame& top = stack_.back();
      Move m{};
      if (!next_move(top, m)) {
        memo_.insert(top.state);
        stack_.pop_back();
        continue;
      }

      PackedState<W> child = top.state;
      sub(child, m.from, 2);
      const std::uint64_t to_count = get(child, m.to) + 1;
      const auto to_index = static_cast<std::size_t>(m.to);
      if (to_count >= static_cast<std::uint64_t>(threshold_[to_index])) {
        out.verdict = Verdict::Solvable;
        if (m.to != target.vertex) {
          ++out.stats.pruned_by_cap;
        }
        for (std::size_t i = 1; i < stack_.size(); ++i) {
          out.moves.push_back(stack_[i].incoming);
        }
        out.moves.push_back(m);
        if (m.to != target.vertex) {
          const auto tail = transport_moves(graph, dist, m.to);
          out.moves.insert(out.moves.end(), tail.begin(), tail.end());
        }
        return out;
      }
      if (to_count > static_cast<std::uint64_t>(kMaxPackedCount)) {
        throw BudgetError("pebble count at vertex " + std::to_string(m.to) + " overflows the packed encoding");
      }
      add(child, m.to, 1);

      const std::uint64_t child_weight =
          top.weight - 2 * scale_[static_cast<std::size_t>(m.from)] + scale_[to_index];
      if (child_weight < one) {
        ++out.stats.pruned_by_weight;
        continue;
      }
      if (memo_.contains(child)) {
        ++out.stats.memo_hits;
        continue;
      }
      stack_.push_back(Frame{child, child_weight, 0, 0, m});
      ++out.stats.nodes_expanded;
      out.stats.max_depth = std::max(out.stats.max_depth, static_cast<int>(stack_.size()) - 1);
    }
    return out;
  }

private:
  struct Frame {
    PackedState<W> state;
    std::uint64_t weight;
    int from;     // next source vertex to try
    int neighbor; // next index into adjacency_[from]
    Move incoming;
  };

  static std::uint64_t get(const PackedState<W>& s, int v) {
    return (s[static_cast<std::size_t>(v / kCountsPerWord)] >> (kBitsPerCount * (v % kCountsPerWord))) & kCountMask;
  }
  static void set(PackedState<W>& s, int v, std::uint64_t value) {
    auto& word = s[static_cast<std::size_t>(v / kCountsPerWord)];
    const int shift = kBitsPerCount * (v % kCountsPerWord);
    word = (word & ~(kCountMask << shift)) | (value << shift);
  }
  static void add(PackedState<W>& s, int v, std::uint64_t k) {
    s[static_cast<std::size_t>(v / kCountsPerWord)] += k << (kBitsPerCount * (v % kCountsPerWord));
  }
  static void sub(PackedState<W>& s, int v, std::uint64_t k) {
    s[static_cast<std::size_t>(v / kCountsPerWord)] -= k << (kBitsPerCount * (v % kCountsPerWord));
  }

  bool next_move(Frame& f, Move& m) const {
    const int n = graph.order();
    while (f.from < n) {
      const auto& nb = adjacency_[static_cast<std::size_t>(f.from)];
      if (get(f.state, f.from) >= 2 && f.neighbor < static_cast<int>(nb.size())) {
        m = Move{f.from, nb[static_cast<std::size_t>(f.neighbor)]};
        ++f.neighbor;
        return true;
      }
      ++f.from;
      f.neighbor = 0;
    }
    return false;
  }

  int ecc_ = 0;
  std::vector<std::uint64_t> scale_;
  std::vector<int> threshold_;
  std::vector<std::vector<Vertex>> adjacency_;
  RefutedSet<W> memo_;
  std::vector<Frame> stack_;
};

std::unique_ptr<Solver::Impl> make_impl(const Graph& g, Target r, SolverOptions opts) {
  if (r.vertex < 0 || r.vertex >= g.order()) {
    throw MoveError("target " + std::to_string(r.vertex) + " out of range");
  }
  switch ((g.order() + kCountsPerWord - 1) / kCountsPerWord) {
  case 1: return std::make_unique<SearchImpl<1>>(g, r, opts);
  case 2: return std::make_unique<SearchImpl<2>>(g, r, opts);
  case 3: return std::make_unique<SearchImpl<3>>(g, r, opts);
  case 4: return std::make_unique<SearchImpl<4>>(g, r, opts);
  case 5: return std::make_unique<SearchImpl<5>>(g, r, opts);
  case 6: return std::make_unique<SearchImpl<6>>(g, r, opts);
  case 7: return std::make_unique<SearchImpl<7>>(g, r, opts);
  default:
    throw BudgetError("solver supports at most 70 vertices, got " + std::to_string(g.order()));
  }
}

} // namespace

Solver::Solver(const Graph& g, Target r, SolverOptions opts) : impl_(make_impl(g, r, opts)) {}
Solver::~Solver() = default;
Solver::Solver(Solver&&) noexcept = default;
Solver& Solver::operator=(Solver&&) noexcept = default;

SolveOutcome Solver::solve(const Configuration& c) { return impl_->solve(c); }
const Graph& Solver::graph() const { return impl_->graph; }
Target Solver::target() const { return impl_->target; }

SolveOutcome is_solvable(const Graph& g, Target r, const Configuration& c, SolverOptions opts) {
  Solver solver(g, r, opts);
  return solver.solve(c);
}

CertificateCheck verify_certificate(const Graph& g, Target r, const Configuration& c, const std::vector<Move>& moves) {
  CertificateCheck check;
  const int n = g.order();
  if (c.size() != n || r.vertex < 0 || r.vertex >= n) {
    check.diagnostic = "configuration or target does not fit the graph";
    return check;
  }
  std::vector<long long> counts(c.counts().begin(), c.counts().end());
  for (std::size_t i = 0; i < moves.size(); ++i) {
    const auto [from, to] = moves[i];
    const bool in_range = from >= 0 && from < n && to >= 0 && to < n;
    if (!in_range || !g.adjacent(from, to)) {
      check.failing_step = static_cast<int>(i);
      check.diagnostic = "step " + std::to_string(i) + ": " + std::to_string(from) + "->" + std::to_string(to) +
                         " is not an edge";
      return check;
    }
    if (counts[static_cast<std::size_t>(from)] < 2) {
      check.failing_step = static_cast<int>(i);
      check.diagnostic = "step " + std::to_string(i) + ": vertex " + std::to_string(from) + " holds " +
                         std::to_string(counts[static_cast<std::size_t>(from)]) + " pebbles";
      return check;
    }
    counts[static_cast<std::size_t>(from)] -= 2;
    counts[static_cast<std::size_t>(to)] += 1;
  }
  if (counts[static_cast<std::size_t>(r.vertex)] < 1) {
    check.failing_step = static_cast<int>(moves.size());
    check.diagnostic = "target " + std::to_string(r.vertex) + " is empty after " + std::to_string(moves.size()) + " moves";
    return check;
  }
  check.ok = true;
  return check;
}

} // namespace pebble
