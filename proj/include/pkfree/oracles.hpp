#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bits.hpp"
#include "coloring.hpp"
#include "errors.hpp"
#include "tournament.hpp"

namespace pkfree {

struct OracleBudget {
  std::size_t max_n_transitive = 22;
  std::size_t max_n_dichromatic = 15;
  std::size_t max_n_homogeneous = 16;
  std::uint64_t max_nodes_pk_search = 50'000'000;
};

namespace detail {

inline std::vector<std::uint32_t> small_rows(const Tournament& t) {
  std::vector<std::uint32_t> out(t.size(), 0);
  for (Vertex u = 0; u < t.size(); ++u)
    for (Vertex v = 0; v < t.size(); ++v)
      if (t.has_edge(u, v)) out[u] |= std::uint32_t{1} << v;
  return out;
}

// transitive[S] for every subset S of V(T). Adding the top vertex v to a
// transitive S' keeps it transitive iff nothing v beats beats something that
// beats v.
inline std::vector<std::uint8_t> transitive_table(const std::vector<std::uint32_t>& out) {
  const std::size_t n = out.size();
  std::vector<std::uint8_t> tr(std::size_t{1} << n, 0);
  tr[0] = 1;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
    int v = std::bit_width(s) - 1;
    std::uint32_t rest = s & ~(std::uint32_t{1} << v);
    if (!tr[rest]) continue;
    std::uint32_t beats = out[v] & rest;
    std::uint32_t beaten_by = rest & ~out[v];
    bool ok = true;
    for (std::uint32_t b = beats; b && ok; b &= b - 1)
      if (out[std::countr_zero(b)] & beaten_by) ok = false;
    tr[s] = ok ? 1 : 0;
  }
  return tr;
}

inline VertexSet set_of_mask(std::uint32_t mask) {
  std::vector<Vertex> out;
  for (std::uint32_t b = mask; b; b &= b - 1) out.push_back(static_cast<Vertex>(std::countr_zero(b)));
  return VertexSet::from_sorted(std::move(out));
}

}  // namespace detail

// Largest transitive subset; among those, the lexicographically smallest
// sorted member list.
inline VertexSet max_transitive_exact(const Tournament& t, const OracleBudget& budget = {}) {
  if (t.size() > budget.max_n_transitive || t.size() > 30)
    throw BudgetExceeded("max_transitive_exact: n=" + std::to_string(t.size()) + " exceeds budget");
  auto tr = detail::transitive_table(detail::small_rows(t));
  std::uint32_t best = 0;
  int best_size = 0;
  for (std::uint32_t s = 0; s < tr.size(); ++s) {
    if (!tr[s]) continue;
    int size = std::popcount(s);
    if (size > best_size) {
      best = s;
      best_size = size;
    } else if (size == best_size) {
      std::uint32_t diff = s ^ best;
      if (diff && (s & (diff & (~diff + 1)))) best = s;
    }
  }
  return detail::set_of_mask(best);
}

struct DichromaticResult {
  std::size_t count = 0;
  Coloring coloring;
};

// Minimum number of transitive classes partitioning V(T).
inline DichromaticResult dichromatic_exact(const Tournament& t, const OracleBudget& budget = {}) {
  const std::size_t n = t.size();
  if (n > budget.max_n_dichromatic || n > 24)
    throw BudgetExceeded("dichromatic_exact: n=" + std::to_string(n) + " exceeds budget");
  auto tr = detail::transitive_table(detail::small_rows(t));
  const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  std::vector<std::uint8_t> best(std::size_t{1} << n, 0xFF);
  std::vector<std::uint32_t> pick(std::size_t{1} << n, 0);
  best[0] = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    std::uint32_t low = s & (~s + 1);
    std::uint32_t rest = s ^ low;
    // every transitive class containing the lowest vertex of s
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      std::uint32_t cls = sub | low;
      if (tr[cls] && best[s ^ cls] + 1 < best[s]) {
        best[s] = static_cast<std::uint8_t>(best[s ^ cls] + 1);
        pick[s] = cls;
      }
      if (sub == 0) break;
    }
  }
  std::vector<VertexSet> classes;
  for (std::uint32_t s = full; s; s ^= pick[s]) classes.push_back(detail::set_of_mask(pick[s]));
  DichromaticResult r;
  r.count = classes.size();
  r.coloring = coloring_from_classes(n, std::move(classes));
  return r;
}

// Backtracking search for P_k in path order: u_{i+1} beats u_i and every
// earlier non-consecutive vertex beats u_{i+1}. First witness in
// lexicographic order, or nullopt.
inline std::optional<std::vector<Vertex>> find_pk_exhaustive(const Tournament& t, std::size_t k,
                                                             const OracleBudget& budget = {}) {
  if (k == 0) return std::vector<Vertex>{};
  const std::size_t n = t.size();
  if (k > n) return std::nullopt;
  const std::size_t wpr = t.words_per_row();

  // beaten[d] = vertices beaten by all of seq[0..d]. Position d draws from
  // beaten[d-2], minus the out-neighbours of seq[d-1].
  struct Search {
    const Tournament& t;
    std::size_t k;
    std::size_t wpr;
    std::vector<Word> everyone;
    std::vector<Vertex> seq;
    std::vector<std::vector<Word>> beaten;
    std::uint64_t nodes = 0;
    std::uint64_t cap = 0;

    bool run(std::size_t depth) {
      if (depth == k) return true;
      std::vector<Word> cand(wpr);
      for (std::size_t w = 0; w < wpr; ++w) {
        Word c = depth >= 2 ? beaten[depth - 2][w] : everyone[w];
        if (depth >= 1) c &= ~t.out_row(seq[depth - 1])[w];
        cand[w] = c;
      }
      for (Vertex used : seq) cand[used / kWordBits] &= ~(Word{1} << (used % kWordBits));
      for (std::size_t w = 0; w < wpr; ++w) {
        for (Word bits = cand[w]; bits; bits &= bits - 1) {
          if (++nodes > cap) throw BudgetExceeded("find_pk_exhaustive: node budget exceeded");
          Vertex v = static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
          seq.push_back(v);
          auto row = t.out_row(v);
          for (std::size_t x = 0; x < wpr; ++x)
            beaten[depth][x] = (depth == 0 ? everyone[x] : beaten[depth - 1][x]) & row[x];
          if (run(depth + 1)) return true;
          seq.pop_back();
        }
      }
      return false;
    }
  };

  BitMask all(n);
  for (std::size_t v = 0; v < n; ++v) all.set(v);
  Search search{t, k, wpr, std::vector<Word>(all.words().begin(), all.words().end()), {},
                std::vector<std::vector<Word>>(k, std::vector<Word>(wpr, 0)), 0, budget.max_nodes_pk_search};
  if (search.run(0)) return search.seq;
  return std::nullopt;
}

// All homogeneous sets with 2 <= |X| <= n-1. Empty iff T is prime (n >= 3).
inline std::vector<VertexSet> homogeneous_sets(const Tournament& t, const OracleBudget& budget = {}) {
  const std::size_t n = t.size();
  if (n > budget.max_n_homogeneous || n > 24)
    throw BudgetExceeded("homogeneous_sets: n=" + std::to_string(n) + " exceeds budget");
  auto out = detail::small_rows(t);
  const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  std::vector<VertexSet> found;
  for (std::uint32_t s = 1; s < full; ++s) {
    if (std::popcount(s) < 2) continue;
    bool homogeneous = true;
    for (std::uint32_t rest = full & ~s; rest && homogeneous; rest &= rest - 1) {
      std::uint32_t hit = out[std::countr_zero(rest)] & s;
      homogeneous = hit == 0 || hit == s;
    }
    if (homogeneous) found.push_back(detail::set_of_mask(s));
  }
  return found;
}

}  // namespace pkfree
