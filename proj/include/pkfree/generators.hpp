#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "errors.hpp"
#include "oracles.hpp"
#include "tournament.hpp"

namespace pkfree {

// One fair coin per pair, pairs in lexicographic order (i < j), i->j on a
// set top bit. std::mt19937_64 is fully specified, so output is portable.
inline Tournament random_tournament(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("random_tournament needs n >= 1");
  std::mt19937_64 gen(seed);
  return Tournament::from_orientation(n, [&](Vertex, Vertex) { return (gen() >> 63) != 0; });
}

// S x F: block i is a copy of F; x in block i beats y in block j != i iff
// s_i beats s_j. Vertex (i, a) is numbered i*|F| + a.
inline Tournament substitution_product(const Tournament& s, const Tournament& f) {
  if (s.size() < 1 || f.size() < 1) throw PreconditionError("substitution product needs nonempty factors");
  const std::size_t fs = f.size();
  if (s.size() * fs > kMaxVertices) throw PreconditionError("substitution product exceeds the vertex cap");
  return Tournament::from_orientation(s.size() * fs, [&](Vertex x, Vertex y) {
    Vertex bx = static_cast<Vertex>(x / fs), by = static_cast<Vertex>(y / fs);
    if (bx == by) return f.has_edge(static_cast<Vertex>(x % fs), static_cast<Vertex>(y % fs));
    return s.has_edge(bx, by);
  });
}

struct FamilySpec {
  Tournament base;
  std::size_t depth = 0;
  std::uint64_t seed = 0;             // where base came from, if searched
  std::size_t pk_free_checked = 0;    // depth up to which P_k-freeness was verified
  std::size_t tr_verified = 0;        // depth up to which tr(F_i) was verified
};

inline constexpr std::size_t kFamilySizeCap = std::size_t{1} << 14;

// F_0 = one vertex, F_{i+1} = B x F_i.
inline Tournament family(const FamilySpec& spec, std::size_t size_cap = kFamilySizeCap) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < spec.depth; ++i) {
    size *= spec.base.size();
    if (size > size_cap) throw PreconditionError("family member exceeds the size cap");
  }
  Tournament f = Tournament::transitive(1);
  for (std::size_t i = 0; i < spec.depth; ++i) f = substitution_product(spec.base, f);
  return f;
}

struct BaseSearch {
  std::optional<Tournament> base;
  std::uint64_t seed = 0;
  std::size_t attempts = 0;
  std::size_t transitive_size = 0;
};

// First seed (from first_seed upward) whose random n-vertex tournament has
// tr <= tr_max and no P_k, both checked exactly.
inline BaseSearch search_base(std::size_t k, std::size_t n, std::size_t tr_max, std::size_t seeds,
                              std::uint64_t first_seed = 0, const OracleBudget& budget = {}) {
  if (n > budget.max_n_transitive) throw BudgetExceeded("search_base: n exceeds the oracle budget");
  BaseSearch out;
  for (std::size_t i = 0; i < seeds; ++i) {
    std::uint64_t seed = first_seed + i;
    ++out.attempts;
    Tournament t = random_tournament(n, seed);
    std::size_t tr = max_transitive_exact(t, budget).size();
    if (tr > tr_max) continue;
    if (find_pk_exhaustive(t, k, budget)) continue;
    out.base = std::move(t);
    out.seed = seed;
    out.transitive_size = tr;
    return out;
  }
  return out;
}

}  // namespace pkfree
