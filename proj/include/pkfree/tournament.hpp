#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace pkfree {

// Dense tournaments are Theta(n^2) bits; refuse anything above this.
inline constexpr std::size_t kMaxVertices = std::size_t{1} << 20;

// Sorted, duplicate-free list of vertex indices.
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

  // Sorts; throws PreconditionError on duplicates.
  explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
      throw PreconditionError("vertex set contains duplicates");
  }

  static VertexSet from_sorted(std::vector<Vertex> sorted) {
    VertexSet s;
    s.members_ = std::move(sorted);
    return s;
  }

  static VertexSet range(Vertex first, Vertex last) {
    std::vector<Vertex> m;
    m.reserve(last > first ? last - first : 0);
    for (Vertex v = first; v < last; ++v) m.push_back(v);
    return from_sorted(std::move(m));
  }

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  Vertex front() const { return members_.front(); }
  Vertex back() const { return members_.back(); }
  const_iterator begin() const noexcept { return members_.begin(); }
  const_iterator end() const noexcept { return members_.end(); }
  const std::vector<Vertex>& members() const noexcept { return members_; }

  bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

  // The m lowest-indexed members.
  VertexSet first(std::size_t m) const {
    if (m > size()) throw PreconditionError("truncation size exceeds set size");
    return from_sorted(std::vector<Vertex>(members_.begin(), members_.begin() + static_cast<std::ptrdiff_t>(m)));
  }

  VertexSet minus(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  VertexSet united(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  VertexSet intersected(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  bool disjoint_from(const VertexSet& other) const {
    auto a = begin();
    auto b = other.begin();
    while (a != end() && b != other.end()) {
      if (*a == *b) return false;
      if (*a < *b) ++a; else ++b;
    }
    return true;
  }

  BitMask mask(std::size_t universe) const { return BitMask(universe, members_); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

// Exact directed density e(X,Y) / (|X||Y|).
struct Density {
  std::uint64_t edges = 0;
  std::uint64_t pairs = 1;

  Rational value() const { return Rational(BigInt(edges), BigInt(pairs)); }
  bool at_least(const Rational& q) const { return ratio_at_least(edges, pairs, q); }
  bool complete() const noexcept { return edges == pairs; }
};

// A complete orientation stored as one out-neighbour bit row per vertex.
class Tournament {
 public:
  Tournament() = default;

  // Orients each pair i < j as i->j iff forward(i, j).
  template <class Forward>
  static Tournament from_orientation(std::size_t n, Forward&& forward) {
    Tournament t(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (forward(static_cast<Vertex>(i), static_cast<Vertex>(j)))
          t.set(i, j);
        else
          t.set(j, i);
      }
    return t;
  }

  // Transitive tournament with i->j for all i < j.
  static Tournament transitive(std::size_t n) {
    return from_orientation(n, [](Vertex, Vertex) { return true; });
  }

  std::size_t size() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return wpr_; }

  bool has_edge(Vertex u, Vertex v) const noexcept {
    return (rows_[u * wpr_ + v / kWordBits] >> (v % kWordBits)) & 1U;
  }

  std::span<const Word> out_row(Vertex v) const noexcept { return {rows_.data() + v * wpr_, wpr_}; }

  // Number of out-neighbours of v inside mask.
  std::size_t out_count(Vertex v, const BitMask& mask) const noexcept { return count_and(out_row(v), mask.words()); }

  // Number of in-neighbours of v inside mask (v itself never counts).
  std::size_t in_count(Vertex v, const BitMask& mask) const noexcept {
    std::size_t total = mask.count();
    std::size_t self = mask.test(v) ? 1 : 0;
    return total - self - out_count(v, mask);
  }

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  explicit Tournament(std::size_t n) : n_(n), wpr_(words_for(n)), rows_(n * words_for(n), 0) {
    if (n > kMaxVertices) throw PreconditionError("tournament exceeds the vertex cap");
  }
  void set(std::size_t u, std::size_t v) noexcept { rows_[u * wpr_ + v / kWordBits] |= Word{1} << (v % kWordBits); }

  std::size_t n_ = 0;
  std::size_t wpr_ = 0;
  std::vector<Word> rows_;
};

// Builds a tournament from an edge list that orients every pair exactly once.
inline Tournament build_tournament(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  if (n > kMaxVertices) throw MalformedInput("tournament exceeds the vertex cap");
  // 0 = unset, 1 = i->j (i<j), 2 = j->i
  std::vector<std::uint8_t> seen(n * n, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw MalformedInput("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) throw MalformedInput("self-loop at vertex " + std::to_string(u));
    auto lo = std::min(u, v);
    auto hi = std::max(u, v);
    auto& slot = seen[lo * n + hi];
    if (slot != 0)
      throw MalformedInput("pair {" + std::to_string(lo) + "," + std::to_string(hi) + "} oriented twice");
    slot = u < v ? 1 : 2;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (seen[i * n + j] == 0)
        throw MalformedInput("pair {" + std::to_string(i) + "," + std::to_string(j) + "} not oriented");
  return Tournament::from_orientation(n, [&](Vertex i, Vertex j) { return seen[i * n + j] == 1; });
}

inline Tournament build_tournament(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  std::vector<std::pair<Vertex, Vertex>> e(edges);
  return build_tournament(n, std::span<const std::pair<Vertex, Vertex>>(e));
}

inline void require_members(const Tournament& t, const VertexSet& x) {
  if (!x.empty() && x.back() >= t.size()) throw PreconditionError("vertex set is not inside the tournament");
}

// e(X, Y): number of edges from X to Y. Sets must be disjoint.
inline std::uint64_t edge_count(const Tournament& t, const VertexSet& x, const VertexSet& y) {
  std::uint64_t e = 0;
  if (y.size() > t.words_per_row()) {
    BitMask ym = y.mask(t.size());
    for (Vertex v : x) e += t.out_count(v, ym);
  } else {
    for (Vertex u : x)
      for (Vertex v : y) e += t.has_edge(u, v) ? 1 : 0;
  }
  return e;
}

inline Density density(const Tournament& t, const VertexSet& x, const VertexSet& y) {
  if (x.empty() || y.empty()) throw PreconditionError("density needs nonempty sets");
  require_members(t, x);
  require_members(t, y);
  if (!x.disjoint_from(y)) throw PreconditionError("density needs disjoint sets");
  return Density{edge_count(t, x, y), static_cast<std::uint64_t>(x.size()) * y.size()};
}

// Returns a directed triangle a->b->c->a inside X, lexicographically first by
// (a, b, c), or nullopt if T|X is transitive.
inline std::optional<std::array<Vertex, 3>> find_cycle3(const Tournament& t, const VertexSet& x) {
  require_members(t, x);
  if (x.size() < 3) return std::nullopt;
  BitMask xm = x.mask(t.size());
  // A tournament is transitive iff its score sequence is 0..m-1.
  std::vector<std::uint8_t> score_seen(x.size(), 0);
  bool transitive = true;
  for (Vertex v : x) {
    std::size_t s = t.out_count(v, xm);
    if (score_seen[s]) {
      transitive = false;
      break;
    }
    score_seen[s] = 1;
  }
  if (transitive) return std::nullopt;
  std::vector<Word> in_a(t.words_per_row());
  for (Vertex a : x) {
    auto row = t.out_row(a);
    auto xw = xm.words();
    for (std::size_t w = 0; w < in_a.size(); ++w) in_a[w] = ~row[w] & xw[w];
    in_a[a / kWordBits] &= ~(Word{1} << (a % kWordBits));
    for (Vertex b : x) {
      if (!t.has_edge(a, b)) continue;
      std::size_t c = first_and(t.out_row(b), in_a);
      if (c != static_cast<std::size_t>(-1)) return std::array<Vertex, 3>{a, b, static_cast<Vertex>(c)};
    }
  }
  throw InvariantViolation("score sequence says cyclic but no triangle was found");
}

inline bool is_transitive(const Tournament& t, const VertexSet& x) { return !find_cycle3(t, x).has_value(); }

struct Induced {
  Tournament tournament;
  std::vector<Vertex> to_original;  // ascending
};

// T|X, with new vertex i standing for the i-th smallest member of X.
inline Induced induced(const Tournament& t, const VertexSet& x) {
  if (x.empty()) throw PreconditionError("induced subtournament of an empty set");
  require_members(t, x);
  const auto& m = x.members();
  Tournament sub = Tournament::from_orientation(x.size(), [&](Vertex i, Vertex j) { return t.has_edge(m[i], m[j]); });
  return Induced{std::move(sub), m};
}

inline VertexSet all_vertices(const Tournament& t) { return VertexSet::range(0, static_cast<Vertex>(t.size())); }

}  // namespace pkfree
