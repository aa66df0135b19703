#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace pkfree {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numer(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denom(const Rational& q) { return boost::multiprecision::denominator(q); }

// num/den >= q, exactly. den > 0.
inline bool ratio_at_least(std::uint64_t num, std::uint64_t den, const Rational& q) {
  return BigInt(num) * denom(q) >= numer(q) * BigInt(den);
}

// floor(q * n) for q >= 0.
inline BigInt floor_mul(const Rational& q, std::uint64_t n) {
  return numer(q) * BigInt(n) / denom(q);
}

// floor(q * n) clamped into int64; values below zero map to -1 and huge
// values saturate. Used to turn "count <= q*n" into an integer comparison.
inline std::int64_t floor_mul_clamped(const Rational& q, std::uint64_t n) {
  BigInt num = numer(q) * BigInt(n);
  BigInt den = denom(q);
  if (num < 0) {
    BigInt fl = -((-num + den - 1) / den);
    return fl < BigInt(-1) ? -1 : static_cast<std::int64_t>(fl);
  }
  BigInt fl = num / den;
  if (fl > BigInt(INT64_MAX)) return INT64_MAX;
  return static_cast<std::int64_t>(fl);
}

// ceil(q * n) for q >= 0, saturating.
inline std::int64_t ceil_mul_clamped(const Rational& q, std::uint64_t n) {
  BigInt num = numer(q) * BigInt(n);
  BigInt den = denom(q);
  BigInt c = (num + den - 1) / den;
  if (c > BigInt(INT64_MAX)) return INT64_MAX;
  return static_cast<std::int64_t>(c);
}

inline std::string to_string(const Rational& q) {
  if (denom(q) == 1) return numer(q).str();
  return numer(q).str() + "/" + denom(q).str();
}

// Accepts "p/q" or an integer "p". Decimal notation is rejected so that
// thresholds keep exact semantics.
inline Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view p = text.substr(0, slash);
  std::string_view q = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(p) || !is_int(q) || q.find('-') != std::string_view::npos)
    throw MalformedInput("expected a rational of the form p/q, got '" + std::string(text) + "'");
  std::string num_text(p);
  if (num_text[0] == '+') num_text.erase(0, 1);
  std::string den_text(q);
  if (den_text[0] == '+') den_text.erase(0, 1);
  BigInt den(den_text);
  if (den == 0) throw MalformedInput("zero denominator in '" + std::string(text) + "'");
  return Rational(BigInt(num_text), den);
}

}  // namespace pkfree
