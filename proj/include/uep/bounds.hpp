#pragma once

// Closed-form achievability and converse bounds for binary UEP codes,
// evaluated exactly. Floating point only enters through log2_rate.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "uep/combinatorics.hpp"
#include "uep/count.hpp"
#include "uep/error.hpp"
#include "uep/params.hpp"

namespace uep {

enum class Direction { kAchievability, kConverse };

inline const char* to_string(Direction d) {
  return d == Direction::kAchievability ? "achievability" : "converse";
}

struct BoundReport {
  std::string name;
  Rational exact_value;
  Count guaranteed_size;  // integer size the statement certifies
  double log2_rate = 0.0; // log2(guaranteed_size) / n, -inf when the size is 0
  Direction direction = Direction::kAchievability;
  unsigned n = 0;
};

/// "A code with at least x codewords exists" certifies ceil(max(x, 0)).
inline BoundReport achievability(std::string name, Rational value, unsigned n) {
  BoundReport r;
  r.name = std::move(name);
  r.guaranteed_size = value > 0 ? ceil_of(value) : Count(0);
  r.exact_value = std::move(value);
  r.direction = Direction::kAchievability;
  r.n = n;
  r.log2_rate = log2_of(r.guaranteed_size) / n;
  return r;
}

/// "Every code has at most x codewords" certifies floor(x).
inline BoundReport converse(std::string name, Rational value, unsigned n) {
  BoundReport r;
  r.name = std::move(name);
  r.guaranteed_size = floor_of(value);
  r.exact_value = std::move(value);
  r.direction = Direction::kConverse;
  r.n = n;
  r.log2_rate = log2_of(r.guaranteed_size) / n;
  return r;
}

/// Gilbert-Varshamov: 2^n / V(n, d-1).
inline BoundReport gv_classic(unsigned n, unsigned d) {
  require(d >= 1 && d <= n, "gv_classic: need 1 <= d <= n");
  return achievability("gv_classic", make_rational(pow2(n), ball_volume(n, d - 1)), n);
}

/// Improved GV G(n, d) = (2^n - T) / (V(n, d-1) - T) with T = T(n, d, d-1).
inline BoundReport gv_improved(unsigned n, unsigned d) {
  require(d >= 1 && d <= n, "gv_improved: need 1 <= d <= n");
  const Count t = ball_intersection(n, d, static_cast<long>(d) - 1);
  const Count den = ball_volume(n, d - 1) - t;
  if (den <= 0) fail(ErrorKind::kInfeasible, "gv_improved: degenerate denominator (d too large for n)");
  return achievability("gv_improved", make_rational(pow2(n) - t, den), n);
}

/// S(n, m, A, d) = sum_i (prod_{j>i} A_j) (A_i - 1) V(n, d_i - 1). Any set W
/// with |W| > S contains a UEP code with this shape and profile.
inline Count multilevel_budget(const UepParams& p) {
  p.validate();
  Count total = 0;
  Count tail = 1;  // prod_{j>i} A_j
  for (std::size_t i = p.levels(); i-- > 0;) {
    total += tail * (p.sizes[i] - 1) * ball_volume(p.n, static_cast<long>(p.distances[i]) - 1);
    tail *= p.sizes[i];
  }
  return total;
}

/// Two-level GV: A >= (2^n - (B-1)V(n, dB-1)) / (B V(n, dA-1)).
inline BoundReport uep_union_bound(const TwoLevelParams& p) {
  p.validate();
  const Count num = pow2(p.n) - (p.B - 1) * ball_volume(p.n, p.dB - 1);
  return achievability("union", make_rational(num, p.B * ball_volume(p.n, p.dA - 1)), p.n);
}

/// How the class-B block length of a time-sharing split is chosen:
///   kStrict:    min m with 2^m / V(m, dB-1) >  B - 1
///   kNonStrict: min m with 2^m / V(m, dB-1) >= B
enum class SplitRule { kStrict, kNonStrict };

struct TsAllocation {
  unsigned nA = 0;
  unsigned nB = 0;
  double alpha_star = 0.0;  // nA / n
};

/// Scan starts at m = dB, so B = 1 gets nB = dB.
inline TsAllocation ts_allocation(unsigned n, const Count& B, unsigned dB, SplitRule rule = SplitRule::kStrict) {
  require(B >= 1 && dB >= 1, "ts_allocation: need B >= 1 and dB >= 1");
  for (unsigned m = dB; m <= n; ++m) {
    const Count space = pow2(m);
    const Count vol = ball_volume(m, dB - 1);
    const bool ok = rule == SplitRule::kStrict ? space > (B - 1) * vol : space >= B * vol;
    if (ok) return TsAllocation{n - m, m, static_cast<double>(n - m) / n};
  }
  fail(ErrorKind::kInfeasible, "ts_allocation: no class-B length <= n carries B messages at distance dB");
}

/// Component sizes (G(nA, dA), G(nB, dB)) of the GV time-sharing code.
inline std::pair<BoundReport, BoundReport> ts_gv(unsigned nA, unsigned nB, unsigned dA, unsigned dB) {
  if (dA > nA || dB > nB) fail(ErrorKind::kInfeasible, "ts_gv: component distance exceeds component length");
  auto a = gv_improved(nA, dA);
  auto b = gv_improved(nB, dB);
  a.name = "ts_A";
  b.name = "ts_B";
  return {std::move(a), std::move(b)};
}

namespace detail {

// M + max((2^n - (B-1)V(n,dB-1) - subtract) / (B V(n,dA-1)), 0)
inline Rational hosted_plus_fill(const TwoLevelParams& p, const Count& hosted, const Count& subtract) {
  const Count num = pow2(p.n) - (p.B - 1) * ball_volume(p.n, p.dB - 1) - subtract;
  Rational fill = make_rational(num, p.B * ball_volume(p.n, p.dA - 1));
  if (fill < 0) fill = 0;
  return Rational(hosted) + fill;
}

}  // namespace detail

/// A_1: class-A messages hosted on the cubes {c} x F_2^{nB} of a GV
/// time-sharing class-A code, then the remaining space filled greedily.
/// Never below the time-sharing size A^TS_G.
inline BoundReport uep_cube_bound(const TwoLevelParams& p, SplitRule rule = SplitRule::kNonStrict) {
  p.validate();
  const TsAllocation split = ts_allocation(p.n, p.B, p.dB, rule);
  if (p.dA > split.nA) fail(ErrorKind::kInfeasible, "uep_cube_bound: class-A length shorter than dA");
  const Count cubes = gv_improved(split.nA, p.dA).guaranteed_size;
  const Count inter = chained_union_upper(p.n, p.B, p.dB, static_cast<long>(p.dA) - 1);
  return achievability("cube", detail::hosted_plus_fill(p, cubes, cubes * inter), p.n);
}

/// Radii and disjoint-ball counts for the ball-hosted bounds.
struct PackingPlan {
  unsigned rV = 0;   // min r with V(n, r) > (B-1) V(n, dB-1)
  unsigned rS = 0;   // rV + ceil(dA / 2)
  Count mS_lower;    // ceil(2^n / V(n, 2 rS)), certified by GV
  Count mS_upper;    // floor(2^n / V(n, rS)), Hamming packing limit
};

inline PackingPlan packing_plan(const TwoLevelParams& p) {
  p.validate();
  const Count need = (p.B - 1) * ball_volume(p.n, p.dB - 1);
  PackingPlan plan;
  unsigned r = 0;
  while (ball_volume(p.n, r) <= need) {
    if (++r > p.n) fail(ErrorKind::kInfeasible, "packing_plan: no radius holds the class-B budget");
  }
  plan.rV = r;
  plan.rS = r + (p.dA + 1) / 2;
  plan.mS_lower = ceil_of(make_rational(pow2(p.n), ball_volume(p.n, 2L * plan.rS)));
  plan.mS_upper = floor_of(make_rational(pow2(p.n), ball_volume(p.n, plan.rS)));
  return plan;
}

/// Which packing count drives the ball-hosted bounds. kOptimistic uses
/// 2^n / V(n, rS), which is not a proven lower bound on the packing number.
enum class PackingEstimate { kCertified, kOptimistic };

inline Count packing_count(const PackingPlan& plan, PackingEstimate est) {
  return est == PackingEstimate::kCertified ? plan.mS_lower : plan.mS_upper;
}

/// A_2: mS concentric radius-rV balls host class-A messages; intersection
/// bound for the carved volume.
inline BoundReport uep_ball_bound(const TwoLevelParams& p, const Count& mS) {
  p.validate();
  require(mS >= 1, "uep_ball_bound: mS must be >= 1");
  const Count inter = chained_union_upper(p.n, p.B, p.dB, static_cast<long>(p.dA) - 1);
  return achievability("ball", detail::hosted_plus_fill(p, mS, mS * inter), p.n);
}

/// A_3: same hosting as A_2, carved volume bounded by enlarged balls of
/// radius rV + dA - 1 around chained centres at distance 2 rS + 1.
inline BoundReport uep_enlargement_bound(const TwoLevelParams& p, const Count& mS) {
  p.validate();
  require(mS >= 1, "uep_enlargement_bound: mS must be >= 1");
  const PackingPlan plan = packing_plan(p);
  if (mS > 1 && 2 * plan.rS + 1 > p.n)
    fail(ErrorKind::kInfeasible, "uep_enlargement_bound: chain distance 2rS+1 exceeds n");
  const Count inter = chained_union_upper(p.n, mS, 2 * plan.rS + 1, static_cast<long>(plan.rV + p.dA) - 1);
  return achievability("enlarge", detail::hosted_plus_fill(p, mS, inter), p.n);
}

inline BoundReport uep_ball_bound(const TwoLevelParams& p, PackingEstimate est = PackingEstimate::kCertified) {
  auto r = uep_ball_bound(p, packing_count(packing_plan(p), est));
  if (est == PackingEstimate::kOptimistic) r.name += "[non-certified]";
  return r;
}

inline BoundReport uep_enlargement_bound(const TwoLevelParams& p,
                                         PackingEstimate est = PackingEstimate::kCertified) {
  auto r = uep_enlargement_bound(p, packing_count(packing_plan(p), est));
  if (est == PackingEstimate::kOptimistic) r.name += "[non-certified]";
  return r;
}

/// Radius used by the sphere-packing converse. kFloor uses floor((dB-1)/2),
/// the packing radius of a distance-dB code, and is a valid upper bound.
/// kCeil uses ceil((dB-1)/2); for even dB that radius is not a packing
/// radius and the value can fall below achievable sizes.
enum class HammingRadius { kFloor, kCeil };

/// Sphere packing with class A relaxed to dB: A <= 2^n / (B V(n, radius)).
inline BoundReport hamming_converse(const TwoLevelParams& p, HammingRadius rule = HammingRadius::kFloor) {
  p.validate();
  const long gap = static_cast<long>(p.dB) - 1;
  const long radius = rule == HammingRadius::kFloor ? gap / 2 : (gap + 1) / 2;
  return converse(rule == HammingRadius::kFloor ? "hamming" : "hamming[ceil]",
                  make_rational(pow2(p.n), p.B * ball_volume(p.n, radius)), p.n);
}

/// Equal protection at dA for the whole tuple: A >= 2^n / (B V(n, dA-1)).
inline BoundReport eep_bound(const TwoLevelParams& p) {
  p.validate();
  return achievability("eep", make_rational(pow2(p.n), p.B * ball_volume(p.n, p.dA - 1)), p.n);
}

/// Which single-level GV bound sizes the time-sharing components.
enum class TsComponentBound { kClassic, kImproved };

namespace detail {

inline unsigned search_cap(unsigned log2A, unsigned log2B, unsigned dA, unsigned dB) {
  return 10 * (log2A + log2B + dA + dB);
}

inline Count component_size(unsigned n, unsigned d, TsComponentBound which) {
  return which == TsComponentBound::kClassic ? gv_classic(n, d).guaranteed_size
                                             : gv_improved(n, d).guaranteed_size;
}

inline unsigned min_component_length(unsigned log2size, unsigned d, unsigned cap, TsComponentBound which) {
  const Count target = pow2(log2size);
  for (unsigned n = d; n <= cap; ++n)
    if (component_size(n, d, which) >= target) return n;
  fail(ErrorKind::kInfeasible, "min_length_ts: search cap exceeded");
}

}  // namespace detail

/// Shortest GV time-sharing length: nA* + nB*.
inline unsigned min_length_ts(unsigned log2A, unsigned log2B, unsigned dA, unsigned dB,
                              TsComponentBound which = TsComponentBound::kClassic) {
  require(log2A >= 1 && log2B >= 1 && dA >= 1 && dB >= 1, "min_length_ts: targets must be >= 1");
  const unsigned cap = detail::search_cap(log2A, log2B, dA, dB);
  return detail::min_component_length(log2A, dA, cap, which) + detail::min_component_length(log2B, dB, cap, which);
}

/// Shortest n at which the cube-hosted bound certifies 2^log2A class-A messages.
inline unsigned min_length_uep(unsigned log2A, unsigned log2B, unsigned dA, unsigned dB,
                               SplitRule rule = SplitRule::kNonStrict) {
  require(log2A >= 1 && log2B >= 1, "min_length_uep: targets must be >= 1");
  require(dA > dB && dB >= 1, "min_length_uep: need dA > dB >= 1");
  const unsigned cap = detail::search_cap(log2A, log2B, dA, dB);
  const Count target = pow2(log2A);
  for (unsigned n = 1; n <= cap; ++n) {
    const TwoLevelParams p{n, pow2(log2B), dA, dB};
    try {
      if (uep_cube_bound(p, rule).guaranteed_size >= target) return n;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kInfeasible) throw;
    }
  }
  fail(ErrorKind::kInfeasible, "min_length_uep: search cap exceeded");
}

/// UEP-over-TS size ratio for fixed distances: the exact ratio of the
/// two-level GV size to G(nA, dA), next to its large-n approximation
/// (a^(dA-1) (1-a)^(dB-1) n^(dB-1) / (dB-1)!), a = nA / n.
struct FixedDistanceRatio {
  Rational exact;
  double exact_value = 0.0;
  double approx = 0.0;
  TsAllocation split;
};

inline FixedDistanceRatio ratio_fixed_distance(const TwoLevelParams& p, SplitRule rule = SplitRule::kStrict) {
  p.validate();
  FixedDistanceRatio out;
  out.split = ts_allocation(p.n, p.B, p.dB, rule);
  if (p.dA > out.split.nA) fail(ErrorKind::kInfeasible, "ratio_fixed_distance: class-A length shorter than dA");
  out.exact = uep_union_bound(p).exact_value / gv_improved(out.split.nA, p.dA).exact_value;
  out.exact_value = to_double(out.exact);
  const double a = out.split.alpha_star;
  double fact = 1.0;
  for (unsigned k = 2; k < p.dB; ++k) fact *= k;
  out.approx = std::pow(a, p.dA - 1.0) * std::pow(1.0 - a, p.dB - 1.0) * std::pow(static_cast<double>(p.n), p.dB - 1.0) / fact;
  return out;
}

}  // namespace uep
