#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "alpha_sequence.hpp"
#include "errors.hpp"
#include "extract.hpp"
#include "patterns.hpp"
#include "schedule.hpp"
#include "tournament.hpp"
#include "trace.hpp"

namespace pkfree {

struct TransResult {
  VertexSet vertices;                          // transitive; empty if a witness was found
  std::optional<std::vector<Vertex>> witness;  // copy of P_k in path order
  Trace trace;

  bool has_witness() const noexcept { return witness.has_value(); }
};

namespace detail {

using TransOutcome = std::variant<VertexSet, PatternWitness>;

inline VertexSet trivial_answer(const VertexSet& universe) { return universe.first(std::min<std::size_t>(2, universe.size())); }

inline TransOutcome find_trans_rec(const Tournament& t, const VertexSet& universe, const ConstantSchedule& s,
                                   const PkPattern& pattern, Trace& trace) {
  const std::size_t n = universe.size();
  if (n <= 1) {
    ++trace.base_exits;
    return universe;
  }
  if (s.trivial_size(n)) {
    ++trace.trivial_exits;
    return trivial_answer(universe);
  }

  try {
    auto built = create_sequence(t, universe, s.k, s, &trace);
    if (auto* w = std::get_if<PatternWitness>(&built)) return *w;
    const AlphaSequence& theta = std::get<SequenceOutcome>(built).sequence;
    AlphaSequence smooth = make_smooth(s.k, theta, s, &trace);
    std::vector<VertexSet> cur = smooth.elements();

    BigInt strict_floor = s.strict() ? s.sequence_size(s.k, n) : BigInt(0);
    std::vector<Vertex> by_position(s.k);
    for (std::size_t i = 0; i < s.k / 2; ++i) {
      const std::size_t u = pattern.left[i];
      const std::size_t v = pattern.right[i];
      BitMask u_mask = cur[u].mask(t.size());
      std::optional<std::pair<Vertex, Vertex>> edge;  // (y, x), y in cur[v], x in cur[u]
      for (Vertex y : cur[v]) {
        std::size_t x = first_and(t.out_row(y), u_mask.words());
        if (x != static_cast<std::size_t>(-1)) {
          edge = std::pair{y, static_cast<Vertex>(x)};
          break;
        }
      }

      if (!edge) {
        Density d = density(t, cur[u], cur[v]);
        if (!d.complete()) throw InvariantViolation("recursion pair is not complete");
        ++trace.recursion_pairs;
        trace.recursion_pair_events.push_back(RecursionPairEvent{u, v, cur[u].size(), cur[v].size(), d});
        auto left = find_trans_rec(t, cur[u], s, pattern, trace);
        if (std::holds_alternative<PatternWitness>(left)) return left;
        auto right = find_trans_rec(t, cur[v], s, pattern, trace);
        if (std::holds_alternative<PatternWitness>(right)) return right;
        VertexSet merged = std::get<VertexSet>(left).united(std::get<VertexSet>(right));
        if (!is_transitive(t, merged)) throw InvariantViolation("union of recursive answers is not transitive");
        return merged;
      }

      auto [y, x] = *edge;
      by_position[u] = x;
      by_position[v] = y;
      for (std::size_t pos = 0; pos < s.k; ++pos) {
        if (pos == u || pos == v) continue;
        VertexSet next = oriented_neighbors(t, y, v, pos, cur[pos]);
        next = oriented_neighbors(t, x, u, pos, next);
        if (next.empty())
          throw DegenerateSize("find_trans: element " + std::to_string(pos) + " emptied by backward edge " +
                               std::to_string(i));
        if (s.strict() && BigInt(4 * next.size()) < strict_floor)
          throw InvariantViolation("element fell below c_k n / 4");
        cur[pos] = std::move(next);
      }
    }

    std::vector<Vertex> path = pattern.to_path_order(by_position);
    if (!check_pk_witness(t, path)) throw InvariantViolation("recorded backward edges do not induce P_k");
    return PatternWitness{std::move(path)};
  } catch (const DegenerateSize& e) {
    ++trace.degenerate_fallbacks;
    if (s.strict()) ++trace.strict_impossible;
    trace.degenerate_reasons.emplace_back(e.what());
    return trivial_answer(universe);
  }
}

}  // namespace detail

// FindTrans on T|universe. Either a transitive subset or, when the input
// contains P_k and the search happens to rebuild it, a witness.
inline TransResult find_trans(const Tournament& t, const VertexSet& universe, const ConstantSchedule& schedule) {
  require_members(t, universe);
  PkPattern pattern = pk_pattern(schedule.k);
  TransResult result;
  auto out = detail::find_trans_rec(t, universe, schedule, pattern, result.trace);
  if (auto* w = std::get_if<PatternWitness>(&out)) {
    ++result.trace.witnesses;
    if (!check_pk_witness(t, w->vertices)) throw InvariantViolation("witness fails check_pk_witness");
    result.witness = std::move(w->vertices);
    return result;
  }
  result.vertices = std::move(std::get<VertexSet>(out));
  if (!is_transitive(t, result.vertices)) throw InvariantViolation("find_trans returned a cyclic set");
  return result;
}

inline TransResult find_trans(const Tournament& t, const ConstantSchedule& schedule) {
  return find_trans(t, all_vertices(t), schedule);
}

inline bool verify_trans_result(const Tournament& t, const VertexSet& universe, const TransResult& result) {
  if (result.has_witness()) return false;
  for (Vertex v : result.vertices)
    if (!universe.contains(v)) return false;
  if (result.vertices.size() < std::min<std::size_t>(2, universe.size())) return false;
  return is_transitive(t, result.vertices);
}

inline bool verify_trans_result(const Tournament& t, const TransResult& result) {
  return verify_trans_result(t, all_vertices(t), result);
}

}  // namespace pkfree
