#include "pebble/configuration.hpp"

#include "pebble/errors.hpp"

#include <algorithm>
#include <numeric>

namespace pebble {

Configuration::Configuration(std::vector<int> counts) : counts_(std::move(counts)) {
  for (std::size_t v = 0; v < counts_.size(); ++v) {
    if (counts_[v] < 0) {
      throw MoveError("negative pebble count at vertex " + std::to_string(v));
    }
  }
  total_ = std::accumulate(counts_.begin(), counts_.end(), 0);
}

int Configuration::sum(std::span<const Vertex> vertices) const {
  int s = 0;
  for (Vertex v : vertices) {
    s += (*this)[v];
  }
  return s;
}

Configuration Configuration::with_added(Vertex v, int delta) const {
  auto counts = counts_;
  counts.at(static_cast<std::size_t>(v)) += delta;
  return Configuration(std::move(counts));
}

std::string Configuration::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i != 0) {
      out += ',';
    }
    out += std::to_string(counts_[i]);
  }
  return out + ")";
}

Dyadic::Dyadic(UInt128 numerator, int exponent) : num_(numerator), exp_(exponent) {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && (num_ & 1U) == 0) {
    num_ >>= 1;
    --exp_;
  }
  while (exp_ < 0) {
    num_ <<= 1;
    ++exp_;
  }
}

double Dyadic::to_double() const {
  double v = static_cast<double>(num_);
  for (int i = 0; i < exp_; ++i) {
    v /= 2.0;
  }
  return v;
}

namespace {

std::string u128_to_string(UInt128 x) {
  if (x == 0) {
    return "0";
  }
  std::string s;
  while (x > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
    x /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

} // namespace

std::string Dyadic::to_string() const {
  if (exp_ == 0) {
    return u128_to_string(num_);
  }
  return u128_to_string(num_) + "/" + u128_to_string(static_cast<UInt128>(1) << exp_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  // Bring both to the larger exponent; reduced numerators stay small enough
  // for every weight this library produces.
  const int e = std::max(a.exp_, b.exp_);
  const UInt128 lhs = a.num_ << (e - a.exp_);
  const UInt128 rhs = b.num_ << (e - b.exp_);
  return lhs <=> rhs;
}

Configuration apply_move(const Graph& g, const Configuration& c, Move m) {
  if (c.size() != g.order()) {
    throw MoveError("configuration has " + std::to_string(c.size()) + " entries, graph has " +
                    std::to_string(g.order()) + " vertices");
  }
  if (m.from < 0 || m.from >= g.order() || m.to < 0 || m.to >= g.order() || !g.adjacent(m.from, m.to)) {
    throw MoveError("move " + std::to_string(m.from) + "->" + std::to_string(m.to) + " is not along an edge");
  }
  if (c[m.from] < 2) {
    throw MoveError("move " + std::to_string(m.from) + "->" + std::to_string(m.to) + " needs 2 pebbles at source, found " +
                    std::to_string(c[m.from]));
  }
  auto counts = std::vector<int>(c.counts().begin(), c.counts().end());
  counts[static_cast<std::size_t>(m.from)] -= 2;
  counts[static_cast<std::size_t>(m.to)] += 1;
  return Configuration(std::move(counts));
}

Dyadic weight(const Configuration& c, std::span<const int> dist) {
  if (static_cast<std::size_t>(c.size()) != dist.size()) {
    throw MoveError("distance vector does not match configuration size");
  }
  const int top = dist.empty() ? 0 : *std::max_element(dist.begin(), dist.end());
  if (top > kMaxWeightDistance) {
    throw BudgetError("distance " + std::to_string(top) + " too large for exact weight");
  }
  UInt128 num = 0;
  for (std::size_t v = 0; v < dist.size(); ++v) {
    num += static_cast<UInt128>(c.counts()[v]) << (top - dist[v]);
  }
  return Dyadic(num, top);
}

bool trivially_solvable(const Configuration& c, std::span<const int> dist) {
  if (static_cast<std::size_t>(c.size()) != dist.size()) {
    throw MoveError("distance vector does not match configuration size");
  }
  for (std::size_t v = 0; v < dist.size(); ++v) {
    const int count = c.counts()[v];
    if (dist[v] == 0 ? count >= 1 : (dist[v] < 31 && count >= (1 << dist[v]))) {
      return true;
    }
  }
  return false;
}

std::vector<int> unsolvability_caps(std::span<const int> dist) {
  std::vector<int> caps(dist.size());
  for (std::size_t v = 0; v < dist.size(); ++v) {
    if (dist[v] > 30) {
      throw BudgetError("distance " + std::to_string(dist[v]) + " exceeds the 30-level cap budget");
    }
    caps[v] = (1 << dist[v]) - 1;
  }
  return caps;
}

std::vector<Move> transport_moves(const Graph& g, std::span<const int> dist, Vertex source) {
  std::vector<Move> moves;
  Vertex at = source;
  int d = dist[static_cast<std::size_t>(source)];
  while (d > 0) {
    Vertex next = -1;
    for (Vertex w : g.neighbors(at)) {
      if (dist[static_cast<std::size_t>(w)] == d - 1) {
        next = w;
        break;
      }
    }
    // 2^(d-1) moves push 2^(d-1) pebbles one step closer.
    const long long reps = 1LL << (d - 1);
    for (long long i = 0; i < reps; ++i) {
      moves.push_back({at, next});
    }
    at = next;
    --d;
  }
  return moves;
}

} // namespace pebble
