#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "schedule.hpp"
#include "tournament.hpp"
#include "trace.hpp"

namespace pkfree {

// Ordered pairwise-disjoint vertex sets (A_1, ..., A_l) of one host tournament.
// Element indices are 0-based.
class AlphaSequence {
 public:
  AlphaSequence() = default;

  AlphaSequence(const Tournament& host, std::vector<VertexSet> elements)
      : host_(&host), elements_(std::move(elements)) {
    for (const auto& a : elements_) {
      if (a.empty()) throw PreconditionError("alpha-sequence element is empty");
      require_members(host, a);
      auto merged = vertices_.united(a);
      if (merged.size() != vertices_.size() + a.size())
        throw PreconditionError("alpha-sequence elements overlap");
      vertices_ = std::move(merged);
    }
  }

  const Tournament& host() const { return *host_; }
  std::size_t length() const noexcept { return elements_.size(); }
  const VertexSet& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<VertexSet>& elements() const noexcept { return elements_; }
  // V(theta)
  const VertexSet& vertices() const noexcept { return vertices_; }

  // Index of the element holding v, if any.
  std::optional<std::size_t> position_of(Vertex v) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if (elements_[i].contains(v)) return i;
    return std::nullopt;
  }

  std::size_t min_element_size() const {
    std::size_t m = elements_.empty() ? 0 : elements_.front().size();
    for (const auto& a : elements_) m = std::min(m, a.size());
    return m;
  }

 private:
  const Tournament* host_ = nullptr;
  std::vector<VertexSet> elements_;
  VertexSet vertices_;
};

// Members of `target` that v points to if target sits after `from`, or that
// point to v if it sits before. This is N_v(j) for v placed at `from`.
inline VertexSet oriented_neighbors(const Tournament& t, Vertex v, std::size_t from, std::size_t to,
                                    const VertexSet& target) {
  std::vector<Vertex> out;
  for (Vertex w : target) {
    if (w == v) continue;
    bool v_to_w = t.has_edge(v, w);
    if ((to > from) == v_to_w) out.push_back(w);
  }
  return VertexSet::from_sorted(std::move(out));
}

inline VertexSet directed_neighbors(const AlphaSequence& theta, Vertex v, std::size_t j) {
  auto i = theta.position_of(v);
  if (!i) throw PreconditionError("vertex is not in the alpha-sequence");
  if (j >= theta.length() || j == *i) throw PreconditionError("neighbour index must name another element");
  return oriented_neighbors(theta.host(), v, *i, j, theta[j]);
}

// tr(theta, m): the m lowest-indexed members of every element.
inline AlphaSequence truncate(const AlphaSequence& theta, std::size_t m) {
  std::vector<VertexSet> out;
  out.reserve(theta.length());
  for (const auto& a : theta.elements()) {
    if (m > a.size()) throw PreconditionError("truncation size exceeds an element");
    out.push_back(a.first(m));
  }
  return AlphaSequence(theta.host(), std::move(out));
}

// theta1 (x) theta2
inline AlphaSequence concat(const AlphaSequence& a, const AlphaSequence& b) {
  if (&a.host() != &b.host()) throw PreconditionError("alpha-sequences live in different tournaments");
  if (!a.vertices().disjoint_from(b.vertices())) throw PreconditionError("alpha-sequences overlap");
  std::vector<VertexSet> out = a.elements();
  out.insert(out.end(), b.elements().begin(), b.elements().end());
  return AlphaSequence(a.host(), std::move(out));
}

struct AlphaReport {
  Rational min_relative_size = 1;  // min_i |A_i| / |T|
  Rational min_pair_density = 1;   // min_{i<j} d(A_i, A_j); 1 when there are no pairs
  Rational worst_vertex_density = 1;  // min per-vertex forward fraction (check_smooth only)
  bool passed = false;
};

namespace detail {

// Running minimum of fractions num/den without going through Rational.
struct MinFraction {
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  void offer(std::uint64_t n, std::uint64_t d) {
    if (static_cast<unsigned __int128>(n) * den < static_cast<unsigned __int128>(num) * d) {
      num = n;
      den = d;
    }
  }
  Rational value() const { return Rational(BigInt(num), BigInt(den)); }
};

}  // namespace detail

// (c, lambda)-alpha-sequence test: |A_i| >= c|T| and d(A_i, A_j) >= 1 - lambda.
inline AlphaReport check_alpha(const AlphaSequence& theta, const Rational& c, const Rational& lambda) {
  AlphaReport r;
  const auto& t = theta.host();
  detail::MinFraction size_min{1, 1}, dens_min{1, 1};
  for (const auto& a : theta.elements()) size_min.offer(a.size(), std::max<std::size_t>(t.size(), 1));
  for (std::size_t i = 0; i < theta.length(); ++i)
    for (std::size_t j = i + 1; j < theta.length(); ++j) {
      Density d = density(t, theta[i], theta[j]);
      dens_min.offer(d.edges, d.pairs);
    }
  r.min_relative_size = size_min.value();
  r.min_pair_density = dens_min.value();
  r.passed = r.min_relative_size >= c && r.min_pair_density >= 1 - lambda;
  return r;
}

// Smoothness: for i < j every x in A_i beats >= (1-lambda)|A_j| of A_j and
// every y in A_j is beaten by >= (1-lambda)|A_i| of A_i.
inline AlphaReport check_smooth(const AlphaSequence& theta, const Rational& lambda) {
  AlphaReport r;
  const auto& t = theta.host();
  detail::MinFraction size_min{1, 1}, dens_min{1, 1}, vertex_min{1, 1};
  for (const auto& a : theta.elements()) size_min.offer(a.size(), std::max<std::size_t>(t.size(), 1));
  std::vector<BitMask> masks;
  for (const auto& a : theta.elements()) masks.push_back(a.mask(t.size()));
  for (std::size_t i = 0; i < theta.length(); ++i)
    for (std::size_t j = i + 1; j < theta.length(); ++j) {
      std::uint64_t edges = 0;
      for (Vertex x : theta[i]) {
        std::size_t out = t.out_count(x, masks[j]);
        edges += out;
        vertex_min.offer(out, theta[j].size());
      }
      for (Vertex y : theta[j]) vertex_min.offer(t.in_count(y, masks[i]), theta[i].size());
      dens_min.offer(edges, static_cast<std::uint64_t>(theta[i].size()) * theta[j].size());
    }
  r.min_relative_size = size_min.value();
  r.min_pair_density = dens_min.value();
  r.worst_vertex_density = vertex_min.value();
  r.passed = r.worst_vertex_density >= 1 - lambda;
  return r;
}

// MakeSmooth: drop from each A_i every v whose oriented neighbourhood in some
// other A_j has at most |A_j|(1 - 2k lambda_k) members. All removal sets are
// computed against the input sequence, then applied at once.
//
// When the input is a (., lambda_k)-alpha-sequence the output is checked to be
// smooth with lambda_f = 4k lambda_k and to keep at least half of every element.
inline AlphaSequence make_smooth(std::size_t k, const AlphaSequence& theta, const ConstantSchedule& schedule,
                                 Trace* trace = nullptr) {
  if (theta.length() != k) throw PreconditionError("make_smooth expects a sequence of length k");
  const auto& t = theta.host();
  const Rational keep_fraction = 1 - 2 * Rational(k) * schedule.lambda_k;

  std::vector<BitMask> masks;
  std::vector<std::int64_t> limit;  // remove v when |N| <= limit[j]
  for (const auto& a : theta.elements()) {
    masks.push_back(a.mask(t.size()));
    limit.push_back(floor_mul_clamped(keep_fraction, a.size()));
  }

  std::vector<VertexSet> out;
  std::vector<std::vector<std::size_t>> removed_by(k, std::vector<std::size_t>(k, 0));
  std::size_t removed_total = 0;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Vertex> kept;
    for (Vertex v : theta[i]) {
      bool drop = false;
      for (std::size_t j = 0; j < k; ++j) {
        if (j == i) continue;
        std::size_t n = j > i ? t.out_count(v, masks[j]) : t.in_count(v, masks[j]);
        if (static_cast<std::int64_t>(n) <= limit[j]) {
          ++removed_by[i][j];
          drop = true;
        }
      }
      if (drop) ++removed_total; else kept.push_back(v);
    }
    if (kept.empty()) throw DegenerateSize("make_smooth emptied element " + std::to_string(i));
    out.push_back(VertexSet::from_sorted(std::move(kept)));
  }
  AlphaSequence smooth(t, std::move(out));
  if (trace) {
    ++trace->smoothing_runs;
    trace->smoothing_removed += removed_total;
  }

  // Premise of the smoothing lemma: pairwise densities >= 1 - lambda_k.
  bool premise = true;
  for (std::size_t i = 0; i < k && premise; ++i)
    for (std::size_t j = i + 1; j < k && premise; ++j)
      premise = density(t, theta[i], theta[j]).at_least(1 - schedule.lambda_k);
  if (premise) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j)
        if (i != j && removed_by[i][j] * 2 * k > theta[i].size())
          throw InvariantViolation("smoothing removed more than |A_i|/(2k) vertices for one j");
      if (smooth[i].size() * 2 < theta[i].size())
        throw InvariantViolation("smoothing kept less than half of an element");
    }
    if (!check_smooth(smooth, schedule.lambda_f).passed)
      throw InvariantViolation("smoothed sequence is not lambda_f-smooth");
  }
  return smooth;
}

}  // namespace pkfree
