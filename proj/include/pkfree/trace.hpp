#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tournament.hpp"

namespace pkfree {

// One MakeDensePair return.
struct DensePairEvent {
  std::size_t x_size = 0;
  std::size_t y_size = 0;
  std::size_t m = 0;
  std::size_t depth = 0;  // recursion levels consumed before the failure step
  bool forward = true;    // X = truncated P_j0 (true) or X = chosen part of S_j0
  Density density;
  Rational lambda;
};

// One FindTrans exit through the recursion on (theta_s(u), theta_s(v)).
struct RecursionPairEvent {
  std::size_t u = 0;
  std::size_t v = 0;
  std::size_t size_u = 0;
  std::size_t size_v = 0;
  Density density;
};

// Which branches a run went through. Tests and the CLI read this; the
// algorithms never consult it.
struct Trace {
  std::size_t base_exits = 0;            // |T| = 1
  std::size_t trivial_exits = 0;         // small-size 2-vertex answer
  std::size_t recursion_pairs = 0;
  std::size_t degenerate_fallbacks = 0;  // a size rounded to zero
  std::size_t unexpected_fallbacks = 0;  // CreateSequence found no dense (L, R)
  std::size_t witnesses = 0;
  std::size_t smoothing_runs = 0;
  std::size_t smoothing_removed = 0;
  std::size_t strict_impossible = 0;     // degenerate or fallback events in strict mode
  std::vector<DensePairEvent> dense_pairs;
  std::vector<RecursionPairEvent> recursion_pair_events;
  std::vector<std::string> degenerate_reasons;

  void merge(const Trace& o) {
    base_exits += o.base_exits;
    trivial_exits += o.trivial_exits;
    recursion_pairs += o.recursion_pairs;
    degenerate_fallbacks += o.degenerate_fallbacks;
    unexpected_fallbacks += o.unexpected_fallbacks;
    witnesses += o.witnesses;
    smoothing_runs += o.smoothing_runs;
    smoothing_removed += o.smoothing_removed;
    strict_impossible += o.strict_impossible;
    dense_pairs.insert(dense_pairs.end(), o.dense_pairs.begin(), o.dense_pairs.end());
    recursion_pair_events.insert(recursion_pair_events.end(), o.recursion_pair_events.begin(),
                                 o.recursion_pair_events.end());
    degenerate_reasons.insert(degenerate_reasons.end(), o.degenerate_reasons.begin(), o.degenerate_reasons.end());
  }
};

}  // namespace pkfree
