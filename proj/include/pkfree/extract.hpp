#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "alpha_sequence.hpp"
#include "errors.hpp"
#include "patterns.hpp"
#include "schedule.hpp"
#include "tournament.hpp"
#include "trace.hpp"

namespace pkfree {

// Vertices realizing the whole forbidden pattern, listed in pattern order.
struct PatternWitness {
  std::vector<Vertex> vertices;
};

struct DensePair {
  VertexSet x;
  VertexSet y;
  Density density;
  bool forward = true;  // x is the truncated P_j0
  std::size_t m = 0;
  std::size_t depth = 0;
};

// Input of MakeDensePair: sets S_{i_1..i_p} of the host tournament and the
// pattern vertices h_{i_1..i_p} they are meant to host.
struct PatternState {
  std::vector<VertexSet> sets;
  std::vector<std::size_t> pattern_index;
  const Tournament* pattern = nullptr;
  std::size_t n = 0;  // size of the tournament CreateSequence started from
  std::vector<Vertex> chosen;
};

namespace detail {

// The m members of `pool` with the highest score, ties to lower index; sorted.
inline VertexSet top_m(const VertexSet& pool, const std::vector<std::size_t>& score, std::size_t m) {
  std::vector<std::size_t> idx(pool.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return score[a] > score[b]; });
  std::vector<Vertex> out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) out.push_back(pool[idx[i]]);
  std::sort(out.begin(), out.end());
  return VertexSet::from_sorted(std::move(out));
}

inline bool is_power_of_two(std::size_t r) { return r >= 2 && std::has_single_bit(r); }

}  // namespace detail

// MakeDensePair. Walks the pattern one vertex at a time: while S_{i_1} has a
// vertex v0 with at least lambda|S_j| correctly oriented neighbours in every
// other set, every S_j shrinks to floor(lambda|S_j|) of those neighbours and
// h_{i_1} is dropped. Otherwise the most common violated index j0 yields a pair
// (truncated P_j0, best m vertices of S_j0) oriented by density, with
// d(X, Y) >= 1 - lambda. If the pattern runs out, the chosen vertices form a
// copy of it and are returned as a witness.
inline std::variant<DensePair, PatternWitness> make_dense_pair(const Tournament& t, PatternState state,
                                                               const ConstantSchedule& schedule,
                                                               Trace* trace = nullptr) {
  if (state.pattern == nullptr || state.sets.empty() || state.sets.size() != state.pattern_index.size())
    throw PreconditionError("make_dense_pair needs one set per pattern vertex");
  for (const auto& s : state.sets) {
    if (s.empty()) throw PreconditionError("make_dense_pair needs nonempty sets");
    require_members(t, s);
  }
  const Rational& lambda = schedule.lambda;
  const Tournament& h = *state.pattern;
  std::vector<std::size_t> chosen_index;
  std::size_t depth = 0;

  while (true) {
    const std::size_t p = state.sets.size();
    const VertexSet& first = state.sets[0];
    const std::size_t h1 = state.pattern_index[0];

    if (p == 1) {
      state.chosen.push_back(first.front());
      chosen_index.push_back(h1);
      for (std::size_t a = 0; a < state.chosen.size(); ++a)
        for (std::size_t b = a + 1; b < state.chosen.size(); ++b)
          if (t.has_edge(state.chosen[a], state.chosen[b]) !=
              h.has_edge(static_cast<Vertex>(chosen_index[a]), static_cast<Vertex>(chosen_index[b])))
            throw InvariantViolation("make_dense_pair witness does not realize the pattern");
      return PatternWitness{std::move(state.chosen)};
    }

    std::vector<BitMask> masks;
    std::vector<std::int64_t> need;  // bad when count < need
    std::vector<bool> out_dir;       // N(v, S_j) are out-neighbours
    for (std::size_t j = 1; j < p; ++j) {
      masks.push_back(state.sets[j].mask(t.size()));
      need.push_back(ceil_mul_clamped(lambda, state.sets[j].size()));
      out_dir.push_back(h.has_edge(static_cast<Vertex>(h1), static_cast<Vertex>(state.pattern_index[j])));
    }
    auto neighbor_count = [&](Vertex v, std::size_t j) {
      return out_dir[j] ? t.out_count(v, masks[j]) : t.in_count(v, masks[j]);
    };

    // bad(v) as an offset into sets (1..p-1); 0 means no violation.
    std::vector<std::size_t> bad(first.size(), 0);
    std::optional<Vertex> candidate;
    for (std::size_t idx = 0; idx < first.size() && !candidate; ++idx) {
      Vertex v = first[idx];
      for (std::size_t j = 0; j + 1 < p; ++j)
        if (static_cast<std::int64_t>(neighbor_count(v, j)) < need[j]) {
          bad[idx] = j + 1;
          break;
        }
      if (bad[idx] == 0) candidate = v;
    }

    if (candidate) {
      Vertex v0 = *candidate;
      std::vector<VertexSet> next;
      for (std::size_t j = 1; j < p; ++j) {
        const VertexSet& s = state.sets[j];
        BigInt keep_big = floor_mul(lambda, s.size());
        std::size_t keep = static_cast<std::size_t>(keep_big);
        if (keep == 0)
          throw DegenerateSize("make_dense_pair: floor(lambda*" + std::to_string(s.size()) + ") is zero at depth " +
                               std::to_string(depth));
        std::vector<Vertex> nb;
        for (Vertex w : s) {
          if (nb.size() == keep) break;
          if (t.has_edge(v0, w) == out_dir[j - 1]) nb.push_back(w);
        }
        if (nb.size() != keep) throw InvariantViolation("good candidate has fewer than lambda|S_j| neighbours");
        next.push_back(VertexSet::from_sorted(std::move(nb)));
      }
      state.chosen.push_back(v0);
      chosen_index.push_back(h1);
      state.sets = std::move(next);
      state.pattern_index.erase(state.pattern_index.begin());
      ++depth;
      continue;
    }

    // Every vertex of S_{i_1} is bad.
    std::vector<std::size_t> count(p, 0);
    for (std::size_t b : bad) ++count[b];
    std::size_t j0 = 1;
    for (std::size_t j = 2; j < p; ++j)
      if (count[j] > count[j0]) j0 = j;
    std::vector<Vertex> p_members;
    for (std::size_t idx = 0; idx < first.size(); ++idx)
      if (bad[idx] == j0) p_members.push_back(first[idx]);
    VertexSet pj0 = VertexSet::from_sorted(std::move(p_members));
    const VertexSet& sj0 = state.sets[j0];

    std::size_t m = 0;
    if (schedule.strict()) {
      BigInt mb = schedule.dense_pair_size(state.n);
      if (mb > BigInt(sj0.size())) throw DegenerateSize("make_dense_pair: m exceeds |S_j0|");
      m = static_cast<std::size_t>(mb);
    } else {
      m = std::min(first.size(), sj0.size()) / schedule.k;
    }
    if (m == 0) throw DegenerateSize("make_dense_pair: m is zero at depth " + std::to_string(depth));
    if (pj0.size() < m || sj0.size() < m) throw DegenerateSize("make_dense_pair: P_j0 or S_j0 smaller than m");

    VertexSet pt = pj0.first(m);
    bool forward = density(t, pj0, sj0).at_least(Rational(1, 2));
    BitMask pt_mask = pt.mask(t.size());
    std::vector<std::size_t> score(sj0.size());
    for (std::size_t i = 0; i < sj0.size(); ++i)
      score[i] = forward ? t.in_count(sj0[i], pt_mask) : t.out_count(sj0[i], pt_mask);
    VertexSet w = detail::top_m(sj0, score, m);

    DensePair out;
    out.x = forward ? pt : w;
    out.y = forward ? w : pt;
    out.forward = forward;
    out.m = m;
    out.depth = depth;
    out.density = density(t, out.x, out.y);
    if (!out.density.at_least(1 - lambda)) throw InvariantViolation("dense pair below 1 - lambda");
    if (trace)
      trace->dense_pairs.push_back(DensePairEvent{out.x.size(), out.y.size(), m, depth, forward, out.density, lambda});
    return out;
  }
}

struct SequenceOutcome {
  AlphaSequence sequence;
  bool unexpected_fallback = false;
};

// CreateSequence over the sub-tournament T|universe. Builds a dense pair with
// MakeDensePair against P_k, then (for r > 2) carves length-r/2 sequences out
// of both sides and joins a pair (L, R) with d(V(L), V(R)) >= 1 - 4 lambda.
inline std::variant<SequenceOutcome, PatternWitness> create_sequence(const Tournament& t, const VertexSet& universe,
                                                                     std::size_t r, const ConstantSchedule& schedule,
                                                                     Trace* trace = nullptr) {
  if (!detail::is_power_of_two(r)) throw PreconditionError("sequence length must be a power of two >= 2");
  require_members(t, universe);
  const std::size_t k = schedule.k;
  const std::size_t n = universe.size();
  if (n <= k) throw DegenerateSize("create_sequence: n <= k");

  const std::size_t part = n / k;
  PatternState state;
  Tournament pk = path_tournament(k);
  state.pattern = &pk;
  state.n = n;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Vertex> block(universe.begin() + static_cast<std::ptrdiff_t>(i * part),
                              universe.begin() + static_cast<std::ptrdiff_t>((i + 1) * part));
    state.sets.push_back(VertexSet::from_sorted(std::move(block)));
    state.pattern_index.push_back(i);
  }

  auto dense = make_dense_pair(t, std::move(state), schedule, trace);
  if (auto* w = std::get_if<PatternWitness>(&dense)) return *w;
  auto& pair = std::get<DensePair>(dense);
  if (schedule.strict() && pair.x.size() != static_cast<std::size_t>(schedule.dense_pair_size(n)))
    throw InvariantViolation("dense pair size differs from floor(c n)");
  if (r == 2) return SequenceOutcome{AlphaSequence(t, {pair.x, pair.y}), false};

  bool inner_fallback = false;
  auto carve = [&](VertexSet side, std::vector<AlphaSequence>& out) -> std::optional<PatternWitness> {
    const std::size_t initial = side.size();
    while (2 * side.size() >= initial) {
      auto sub = create_sequence(t, side, r / 2, schedule, trace);
      if (auto* w = std::get_if<PatternWitness>(&sub)) return *w;
      auto& got = std::get<SequenceOutcome>(sub);
      inner_fallback = inner_fallback || got.unexpected_fallback;
      side = side.minus(got.sequence.vertices());
      out.push_back(std::move(got.sequence));
    }
    return std::nullopt;
  };
  std::vector<AlphaSequence> lefts, rights;
  if (auto w = carve(pair.x, lefts)) return *w;
  if (auto w = carve(pair.y, rights)) return *w;

  const Rational threshold = 1 - 4 * schedule.lambda;
  for (const auto& l : lefts)
    for (const auto& rr : rights) {
      if (!density(t, l.vertices(), rr.vertices()).at_least(threshold)) continue;
      AlphaSequence joined = concat(l, rr);
      std::size_t m = 0;
      if (schedule.strict()) {
        BigInt mb = schedule.sequence_size(r, n);
        if (mb > BigInt(joined.min_element_size())) throw DegenerateSize("create_sequence: m exceeds an element");
        m = static_cast<std::size_t>(mb);
      } else {
        m = joined.min_element_size();
      }
      if (m == 0) throw DegenerateSize("create_sequence: m is zero");
      AlphaSequence out = truncate(joined, m);
      if (schedule.strict()) {
        auto report = check_alpha(out, 0, schedule.lambda_r(r));
        if (!report.passed) throw InvariantViolation("strict create_sequence output is not lambda_r-dense");
      }
      return SequenceOutcome{std::move(out), inner_fallback};
    }

  if (trace) {
    ++trace->unexpected_fallbacks;
    if (schedule.strict()) ++trace->strict_impossible;
  }
  return SequenceOutcome{concat(lefts.front(), rights.front()), true};
}

inline std::variant<SequenceOutcome, PatternWitness> create_sequence(const Tournament& t, std::size_t r,
                                                                     const ConstantSchedule& schedule,
                                                                     Trace* trace = nullptr) {
  return create_sequence(t, all_vertices(t), r, schedule, trace);
}

}  // namespace pkfree
