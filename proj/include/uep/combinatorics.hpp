#pragma once

// Exact Hamming-space volumes and the entropy functions used by the
// asymptotic estimates.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <unordered_map>
#include <vector>

#include "uep/count.hpp"
#include "uep/error.hpp"

namespace uep {

namespace detail {

// Row n of Pascal's triangle together with its prefix sums, cached per thread.
struct BinomialRow {
  std::vector<Count> binom;   // C(n, k), k = 0..n
  std::vector<Count> prefix;  // V(n, r) = sum_{k<=r} C(n, k)
};

inline const BinomialRow& binomial_row(unsigned n) {
  thread_local std::unordered_map<unsigned, BinomialRow> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  if (cache.size() > 4096) cache.clear();

  BinomialRow row;
  row.binom.resize(n + 1);
  row.prefix.resize(n + 1);
  row.binom[0] = 1;
  for (unsigned k = 0; k < n; ++k) row.binom[k + 1] = row.binom[k] * (n - k) / (k + 1);  // exact
  Count acc = 0;
  for (unsigned k = 0; k <= n; ++k) {
    acc += row.binom[k];
    row.prefix[k] = acc;
  }
  return cache.emplace(n, std::move(row)).first->second;
}

}  // namespace detail

inline Count binomial(unsigned n, long k) {
  if (k < 0 || k > static_cast<long>(n)) return 0;
  return detail::binomial_row(n).binom[static_cast<std::size_t>(k)];
}

/// V(n, r): number of words within distance r of a fixed word. Radii past n
/// clamp to the full space; negative radii give 0.
inline Count ball_volume(unsigned n, long r) {
  if (r < 0) return 0;
  const auto top = static_cast<std::size_t>(std::min<long>(r, n));
  return detail::binomial_row(n).prefix[top];
}

/// T(n, d, r): size of B(x, r) ∩ B(y, r) for d_H(x, y) = d.
///
/// A word z splits into s flips on the d coordinates where x and y differ and
/// t flips elsewhere; then d_H(x, z) = s + t and d_H(y, z) = d - s + t. Both
/// s = 0 and t = 0 are admissible.
inline Count ball_intersection(unsigned n, unsigned d, long r) {
  require(d >= 1 && d <= n, "ball_intersection: need 1 <= d <= n");
  if (r < 0) return 0;
  Count total = 0;
  const long rest = static_cast<long>(n - d);
  for (long s = 0; s <= static_cast<long>(d); ++s) {
    // t <= r - s, t <= r - d + s, t <= n - d
    const long t_max = std::min({r - s, r - static_cast<long>(d) + s, rest});
    if (t_max < 0) continue;
    total += binomial(d, s) * ball_volume(static_cast<unsigned>(rest), t_max);
  }
  return total;
}

/// I(n, N, d, r) = N V(n, r) - (N - 1) T(n, d, r): upper bound on the union
/// of N radius-r balls whose centres form a chain with exact step d.
/// For N = 1 the chain distance is irrelevant and is not validated.
inline Count chained_union_upper(unsigned n, const Count& balls, unsigned d, long r) {
  require(balls >= 1, "chained_union_upper: need at least one ball");
  const Count vol = ball_volume(n, r);
  if (balls == 1) return vol;
  return balls * vol - (balls - 1) * ball_intersection(n, d, r);
}

/// h(x) in bits, with 0 log 0 = 0.
inline double binary_entropy(double x) {
  require(x >= 0.0 && x <= 1.0, "binary_entropy: x outside [0, 1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

/// Inverse of h on [0, 1/2] by bisection.
inline double binary_entropy_inv(double y) {
  require(y >= 0.0 && y <= 1.0, "binary_entropy_inv: y outside [0, 1]");
  if (y == 0.0) return 0.0;
  if (y == 1.0) return 0.5;
  double lo = 0.0;
  double hi = 0.5;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    (binary_entropy(mid) < y ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

/// g(x, y) = h(x) + h(y) - h(x + y); positive for x, y in (0, 1/2).
inline double entropy_gap_g(double x, double y) {
  require(x > 0.0 && x < 0.5 && y > 0.0 && y < 0.5, "entropy_gap_g: x, y must lie in (0, 1/2)");
  require(x + y <= 1.0, "entropy_gap_g: x + y > 1");
  return binary_entropy(x) + binary_entropy(y) - binary_entropy(x + y);
}

}  // namespace uep
