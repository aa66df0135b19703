#pragma once

#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "find_trans.hpp"
#include "schedule.hpp"
#include "tournament.hpp"
#include "trace.hpp"

namespace pkfree {

struct Coloring {
  std::vector<VertexSet> classes;
  std::vector<std::size_t> color_of;  // vertex -> index into classes

  std::size_t count() const noexcept { return classes.size(); }
};

inline Coloring coloring_from_classes(std::size_t n, std::vector<VertexSet> classes) {
  Coloring c;
  c.classes = std::move(classes);
  c.color_of.assign(n, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < c.classes.size(); ++i)
    for (Vertex v : c.classes[i])
      if (v < n) c.color_of[v] = i;
  return c;
}

// AcyclicColoring: peel transitive sets with find_trans until nothing is left.
// Throws PatternFound if an extraction produces a P_k witness.
inline Coloring acyclic_coloring(const Tournament& t, const ConstantSchedule& schedule, Trace* trace = nullptr) {
  VertexSet remaining = all_vertices(t);
  std::vector<VertexSet> classes;
  while (!remaining.empty()) {
    TransResult r = find_trans(t, remaining, schedule);
    if (trace) trace->merge(r.trace);
    if (r.has_witness()) throw PatternFound(*r.witness);
    if (r.vertices.empty()) throw InvariantViolation("find_trans made no progress");
    remaining = remaining.minus(r.vertices);
    classes.push_back(std::move(r.vertices));
  }
  return coloring_from_classes(t.size(), std::move(classes));
}

// Partition of V(T) into transitive classes, with color_of consistent.
inline bool verify_coloring(const Tournament& t, const Coloring& c) {
  std::vector<std::size_t> owner(t.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    if (c.classes[i].empty()) return false;
    for (Vertex v : c.classes[i]) {
      if (v >= t.size() || owner[v] != static_cast<std::size_t>(-1)) return false;
      owner[v] = i;
    }
    if (!is_transitive(t, c.classes[i])) return false;
  }
  for (std::size_t v = 0; v < t.size(); ++v)
    if (owner[v] == static_cast<std::size_t>(-1)) return false;
  return c.color_of.empty() || c.color_of == owner;
}

}  // namespace pkfree
