#pragma once

// Large-n conditions under which hosting class-B codewords inside balls (or
// cubes) beats the plain two-level GV bound and time sharing by an
// exponential factor.

#include <algorithm>
#include <cmath>
#include <limits>

#include "uep/bounds.hpp"
#include "uep/combinatorics.hpp"

namespace uep {

struct AsymptoticReport {
  // R_B + h(beta_B) <= 1. When false, eta is clamped to 1/2 and the
  // conditions below report false.
  bool class_b_feasible = false;
  double eta = 0.0;  // h^-1(R_B + h(beta_B)), the normalised radius r_V / n
  // Exponent margins. gamma > 0: enlargement beats the union bound by about
  // M_S codewords. Gamma > 0: the ratio of the two grows exponentially.
  double gamma_exponent = 0.0;
  double Gamma_exponent = 0.0;
  bool condition_dB_small = false;
  bool condition_rate_improve = false;
  // B V(n, dA) <= 2^n in exponent form: R_B + h(beta_A) <= 1.
  bool volume_hypothesis = false;

  // Time-sharing comparison at blocklength n.
  double alpha_star = std::numeric_limits<double>::quiet_NaN();
  double gain_exponent = std::numeric_limits<double>::quiet_NaN();
  bool gain_preconditions = false;  // beta_A <= a/2, beta_B <= min((1-a)/2, beta_A)
  bool condition_gain = false;

  double betaA = 0.0;
  double betaB = 0.0;
  double RB = 0.0;
};

namespace detail {

// Exponent of V(n, x n) / n: h(x) up to 1/2, flat at 1 beyond.
inline double ball_exponent(double x) { return binary_entropy(std::clamp(x, 0.0, 0.5)); }

}  // namespace detail

/// `n` only fixes the time-sharing split used by the gain condition:
/// B = 2^round(R_B n), d_B = max(1, round(beta_B n)).
inline AsymptoticReport asymptotic_check(double betaA, double betaB, double RB, unsigned n) {
  require(betaB > 0.0 && betaB <= betaA && betaA < 0.5, "asymptotic_check: need 0 < betaB <= betaA < 1/2");
  require(RB >= 0.0 && RB <= 1.0, "asymptotic_check: RB outside [0, 1]");
  require(n >= 1, "asymptotic_check: n must be >= 1");

  AsymptoticReport r;
  r.betaA = betaA;
  r.betaB = betaB;
  r.RB = RB;
  r.class_b_feasible = RB + binary_entropy(betaB) <= 1.0;
  r.eta = binary_entropy_inv(std::min(1.0, RB + binary_entropy(betaB)));
  const double budget = RB + binary_entropy(betaA);
  r.gamma_exponent = budget - detail::ball_exponent(betaA + r.eta);
  r.Gamma_exponent = budget - detail::ball_exponent(betaA + 2.0 * r.eta);
  r.condition_dB_small = r.class_b_feasible && r.gamma_exponent > 0.0;
  r.condition_rate_improve = r.class_b_feasible && r.Gamma_exponent > 0.0;
  r.volume_hypothesis = budget <= 1.0;

  const auto log2B = static_cast<unsigned>(std::lround(RB * n));
  const auto dB = std::max<unsigned>(1, static_cast<unsigned>(std::lround(betaB * n)));
  try {
    const TsAllocation split = ts_allocation(n, pow2(log2B), dB, SplitRule::kStrict);
    const double a = split.alpha_star;
    r.alpha_star = a;
    r.gain_preconditions = r.class_b_feasible && a > 0.0 && a < 1.0 && betaA <= a / 2 && betaB <= std::min((1.0 - a) / 2, betaA);
    if (r.gain_preconditions) {
      r.gain_exponent = a * binary_entropy(betaA / a) + (1.0 - a) * binary_entropy(betaB / (1.0 - a)) -
                        binary_entropy(betaA);
      r.condition_gain = r.gain_exponent > 0.0;
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kInfeasible) throw;
  }
  return r;
}

}  // namespace uep
