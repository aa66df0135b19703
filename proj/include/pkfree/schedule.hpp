#pragma once

#include <bit>
#include <cstddef>
#include <string>

#include "errors.hpp"
#include "rational.hpp"

namespace pkfree {

enum class Mode { strict, relaxed };

inline const char* to_string(Mode m) { return m == Mode::strict ? "strict" : "relaxed"; }

// Every numeric parameter the extraction procedures use, for one effective k.
//
// Strict mode uses lambda = 1/(32 k^4) and sizes such as m = floor(c n)
// exactly; at desk scale those round to zero, so the nontrivial branches
// only run for astronomically large n. Relaxed mode replaces lambda by a
// user value and switches sizing to the realized set sizes (see extract.hpp),
// keeping the control flow while voiding the size guarantees.
struct ConstantSchedule {
  std::size_t k_user = 0;
  std::size_t k = 0;      // power of two, >= 4
  std::size_t log_k = 0;
  Mode mode = Mode::strict;

  Rational lambda;         // 1/(32k^4) or the override
  Rational lambda_k;       // 4 lambda k^2
  Rational lambda_f;       // 4 k lambda_k
  Rational c;              // lambda^k / k^2
  Rational c_k_findtrans;  // (1/k) c^(log k + 1), trivial-size threshold of FindTrans

  bool strict() const noexcept { return mode == Mode::strict; }

  // c_r = c (c/2)^(log r - 1), the relative element size of a length-r sequence.
  Rational c_r(std::size_t r) const {
    Rational out = c;
    Rational half_c = c / 2;
    for (std::size_t w = std::bit_width(r) - 1; w > 1; --w) out *= half_c;
    return out;
  }

  // lambda_2 = lambda, lambda_r = 4 lambda r^2 for r > 2.
  Rational lambda_r(std::size_t r) const {
    if (r <= 2) return lambda;
    return 4 * lambda * Rational(r * r);
  }

  // floor(c n): output size of MakeDensePair in strict mode.
  BigInt dense_pair_size(std::size_t n) const { return floor_mul(c, n); }

  // floor(c_r n): element size of a length-r sequence in strict mode.
  BigInt sequence_size(std::size_t r, std::size_t n) const { return floor_mul(c_r(r), n); }

  // Strict: |T| <= k / c_k takes the trivial branch. Relaxed: |T| <= k.
  bool trivial_size(std::size_t n) const {
    if (!strict()) return n <= k;
    return Rational(n) * c_k_findtrans <= Rational(k);
  }
};

inline std::size_t effective_k(std::size_t k_user) {
  std::size_t k = 4;
  while (k < k_user) k *= 2;
  return k;
}

inline ConstantSchedule schedule_for(std::size_t k_user, Mode mode, const Rational& lambda_override = Rational(1, 4)) {
  if (k_user < 3) throw PreconditionError("k must be at least 3");
  if (k_user > 64) throw UnsupportedSize("k above 64 is not supported");
  ConstantSchedule s;
  s.k_user = k_user;
  s.k = effective_k(k_user);
  s.log_k = static_cast<std::size_t>(std::bit_width(s.k) - 1);
  s.mode = mode;
  const Rational kq(s.k);
  if (mode == Mode::strict) {
    s.lambda = Rational(1) / (32 * kq * kq * kq * kq);
  } else {
    if (lambda_override <= 0 || lambda_override > Rational(1, 2))
      throw PreconditionError("relaxed lambda must lie in (0, 1/2]");
    s.lambda = lambda_override;
  }
  s.lambda_k = 4 * s.lambda * kq * kq;
  s.lambda_f = 4 * kq * s.lambda_k;
  Rational lambda_pow = 1;
  for (std::size_t i = 0; i < s.k; ++i) lambda_pow *= s.lambda;
  s.c = lambda_pow / (kq * kq);
  Rational c_pow = 1;
  for (std::size_t i = 0; i < s.log_k + 1; ++i) c_pow *= s.c;
  s.c_k_findtrans = c_pow / kq;
  if (s.strict() && s.lambda_f > Rational(1) / (2 * kq))
    throw InvariantViolation("strict schedule must satisfy lambda_f <= 1/(2k)");
  return s;
}

}  // namespace pkfree
