#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "pkfree/tournament.hpp"

namespace pkfree::support {

// Uniform random subset of `pool` with exactly `size` members.
inline VertexSet random_subset(const VertexSet& pool, std::size_t size, std::mt19937_64& rng) {
  std::vector<Vertex> v = pool.members();
  std::shuffle(v.begin(), v.end(), rng);
  v.resize(size);
  return VertexSet(std::move(v));
}

// Independent acyclicity check: Kahn's algorithm on T|X.
inline bool has_topological_order(const Tournament& t, const VertexSet& x) {
  std::vector<std::size_t> indeg(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (i != j && t.has_edge(x[j], x[i])) ++indeg[i];
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (indeg[i] == 0) stack.push_back(i);
  std::size_t seen = 0;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    ++seen;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (i != j && t.has_edge(x[i], x[j]) && --indeg[j] == 0) stack.push_back(j);
  }
  return seen == x.size();
}

// Every tournament on n vertices, indexed by a bit per lexicographic pair.
inline Tournament tournament_from_code(std::size_t n, std::uint64_t code) {
  std::size_t bit = 0;
  return Tournament::from_orientation(n, [&](Vertex, Vertex) { return (code >> bit++) & 1U; });
}

// Plain pair-by-pair edge count, independent of the bit-row fast paths.
inline std::uint64_t brute_edges(const Tournament& t, const VertexSet& x, const VertexSet& y) {
  std::uint64_t e = 0;
  for (Vertex a : x)
    for (Vertex b : y)
      if (t.has_edge(a, b)) ++e;
  return e;
}

}  // namespace pkfree::support

#include "pkfree/alpha_sequence.hpp"

namespace pkfree::support {

struct Planted {
  Tournament tournament;
  std::vector<VertexSet> elements;
};

// k blocks of `size` vertices; block i beats block j (i < j) except for at
// most floor(lambda_k * size^2) reversed pairs per block pair, piled onto a
// few random vertices so that some of them end up sparse.
inline Planted planted_sequence(std::size_t k, std::size_t size, const Rational& lambda_k, std::mt19937_64& rng) {
  const std::size_t n = k * size;
  std::vector<std::uint8_t> reversed(n * n, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      std::size_t budget = static_cast<std::size_t>(floor_mul(lambda_k, size * size));
      budget = budget == 0 ? 0 : rng() % (budget + 1);
      while (budget > 0) {
        bool from_left = rng() & 1;
        std::size_t hub = (from_left ? i : j) * size + rng() % size;
        std::size_t amount = 1 + rng() % std::min(budget, size);
        for (std::size_t a = 0; a < amount; ++a) {
          std::size_t other = (from_left ? j : i) * size + rng() % size;
          std::size_t lo = from_left ? hub : other, hi = from_left ? other : hub;
          if (!reversed[lo * n + hi]) {
            reversed[lo * n + hi] = 1;
            --budget;
          }
          if (budget == 0) break;
        }
      }
    }
  std::vector<std::uint8_t> coin(n * n);
  for (auto& c : coin) c = rng() & 1;
  Tournament t = Tournament::from_orientation(n, [&](Vertex a, Vertex b) {
    if (a / size == b / size) return coin[a * n + b] != 0;
    return reversed[a * n + b] == 0;
  });
  std::vector<VertexSet> elements;
  for (std::size_t i = 0; i < k; ++i)
    elements.push_back(VertexSet::range(static_cast<Vertex>(i * size), static_cast<Vertex>((i + 1) * size)));
  return {std::move(t), std::move(elements)};
}

}  // namespace pkfree::support
