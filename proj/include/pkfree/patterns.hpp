#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "tournament.hpp"

namespace pkfree {

// P_k on vertices 0..k-1 in path order: (i+1)->i, and i->j whenever j > i+1.
inline Tournament path_tournament(std::size_t k) {
  if (k < 1) throw PreconditionError("path tournament needs k >= 1");
  return Tournament::from_orientation(k, [](Vertex i, Vertex j) { return j != i + 1; });
}

// P_k under its matching ordering. Positions and path vertices are 0-based.
struct PkPattern {
  std::size_t k = 0;
  // matching_order[p] is the path vertex sitting at position p.
  std::vector<Vertex> matching_order;
  // Backward edges (from, to) as path vertices, sorted by left position.
  std::vector<std::pair<Vertex, Vertex>> backward_edges;
  // left[i] < right[i]: positions of the endpoints of backward edge i.
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;

  // Reorders vertices given per position into path order.
  std::vector<Vertex> to_path_order(std::span<const Vertex> by_position) const {
    std::vector<Vertex> path(k);
    for (std::size_t p = 0; p < k; ++p) path[matching_order[p]] = by_position[p];
    return path;
  }
};

// The backward edges of `order` (a list of vertices of t), as position pairs
// (earlier, later) with the later vertex beating the earlier one.
inline std::vector<std::pair<std::size_t, std::size_t>> backward_positions(const Tournament& t,
                                                                          std::span<const Vertex> order) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 0; p < order.size(); ++p)
    for (std::size_t q = p + 1; q < order.size(); ++q)
      if (t.has_edge(order[q], order[p])) out.emplace_back(p, q);
  return out;
}

inline PkPattern pk_pattern(std::size_t k) {
  if (k < 4 || k % 2 != 0) throw UnsupportedSize("matching ordering needs an even k >= 4");
  PkPattern pat;
  pat.k = k;
  pat.matching_order.push_back(0);
  for (Vertex v = 2; v + 1 <= k - 1; v += 2) {
    pat.matching_order.push_back(v);
    pat.matching_order.push_back(v - 1);
  }
  pat.matching_order.push_back(static_cast<Vertex>(k - 1));

  Tournament pk = path_tournament(k);
  auto back = backward_positions(pk, pat.matching_order);
  if (back.size() != k / 2) throw InvariantViolation("matching ordering has the wrong number of backward edges");
  std::vector<bool> touched(k, false);
  for (auto [p, q] : back) {
    if (touched[p] || touched[q]) throw InvariantViolation("backward edges of the matching ordering share an endpoint");
    touched[p] = touched[q] = true;
    pat.left.push_back(p);
    pat.right.push_back(q);
    Vertex from = pat.matching_order[q];
    Vertex to = pat.matching_order[p];
    if (from != to + 1) throw InvariantViolation("backward edge is not of the form (v_{i+1}, v_i)");
    pat.backward_edges.emplace_back(from, to);
  }
  return pat;
}

// True iff seq, read as a path ordering, induces exactly P_k.
inline bool check_pk_witness(const Tournament& t, std::span<const Vertex> seq) {
  for (Vertex v : seq)
    if (v >= t.size()) throw PreconditionError("witness vertex outside the tournament");
  std::vector<Vertex> sorted(seq.begin(), seq.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PreconditionError("witness repeats a vertex");
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      bool backward = j == i + 1;
      if (t.has_edge(seq[j], seq[i]) != backward) return false;
    }
  return true;
}

}  // namespace pkfree
