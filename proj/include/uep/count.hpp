#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "uep/error.hpp"

namespace uep {

/// Exact nonnegative count of binary words. Signed storage so that
/// differences such as 2^n - (B-1)V can be formed before clamping.
using Count = boost::multiprecision::cpp_int;

/// Exact rational, always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Count pow2(unsigned exponent) {
  Count out = 1;
  out <<= exponent;
  return out;
}

inline Rational make_rational(const Count& num, const Count& den) {
  if (den == 0) fail(ErrorKind::kInternal, "rational with zero denominator");
  return Rational(num, den);
}

inline Count numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Count denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Count floor_of(const Rational& q) {
  const Count num = numerator_of(q);
  const Count den = denominator_of(q);
  Count quot = num / den;  // truncates toward zero
  if (num < 0 && quot * den != num) --quot;
  return quot;
}

inline Count ceil_of(const Rational& q) {
  const Count fl = floor_of(q);
  return fl * denominator_of(q) == numerator_of(q) ? fl : fl + 1;
}

/// log2 of a positive count; -inf for zero. Accurate to double precision
/// for arbitrarily large values.
inline double log2_of(const Count& x) {
  if (x <= 0) return -std::numeric_limits<double>::infinity();
  const auto msb = static_cast<long>(boost::multiprecision::msb(x));
  if (msb < 53) return std::log2(x.convert_to<double>());
  const long shift = msb - 52;
  const Count top = x >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

inline double log2_of(const Rational& q) {
  if (q <= 0) return -std::numeric_limits<double>::infinity();
  return log2_of(numerator_of(q)) - log2_of(denominator_of(q));
}

inline double to_double(const Rational& q) {
  if (q == 0) return 0.0;
  const Count num = boost::multiprecision::abs(numerator_of(q));
  const Count den = denominator_of(q);
  const long k = 64 - (static_cast<long>(boost::multiprecision::msb(num)) - static_cast<long>(boost::multiprecision::msb(den)));
  const Count t = k >= 0 ? Count(num << k) / den : Count(num / (den << -k));
  const double magnitude = std::ldexp(t.convert_to<double>(), static_cast<int>(-k));
  return q < 0 ? -magnitude : magnitude;
}

inline std::string to_string(const Count& x) { return x.str(); }
inline std::string to_string(const Rational& q) { return numerator_of(q).str() + "/" + denominator_of(q).str(); }

inline Count parse_count(const std::string& text) {
  require(!text.empty(), "empty integer");
  for (char c : text) require(c >= '0' && c <= '9', "not a nonnegative integer: " + text);
  return Count(text);
}

}  // namespace uep
