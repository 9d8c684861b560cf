#pragma once

// Random search for linear UEP (LUEP) generator matrices.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "uep/code.hpp"
#include "uep/combinatorics.hpp"
#include "uep/count.hpp"
#include "uep/error.hpp"
#include "uep/word.hpp"

namespace uep {

struct LinearSearchParams {
  unsigned n = 0;
  unsigned kA = 0;  // class-A information bits u_1..u_kA
  unsigned kB = 0;  // class-B information bits u_{kA+1}..u_{kA+kB}
  unsigned dA = 1;
  unsigned dB = 1;
  std::uint64_t seed = 0;
  std::uint64_t max_trials = 1000;
};

/// Rows of a (kA + kB) x n generator matrix; row i multiplies u_{i+1}.
using GeneratorMatrix = std::vector<Word>;

struct LuepSearchResult {
  std::optional<GeneratorMatrix> generator;
  std::uint64_t trials = 0;          // trials run, including the successful one
  double success_lower_bound = 0.0;  // per-trial success probability bound
};

/// B (A - 1) V(n, dA - 1) + (B - 1) V(n, dB - 1) with A = 2^kA, B = 2^kB:
/// the expected number of information vectors whose codeword is too light.
inline Count luep_budget(const LinearSearchParams& q) {
  const Count A = pow2(q.kA);
  const Count B = pow2(q.kB);
  return B * (A - 1) * ball_volume(q.n, static_cast<long>(q.dA) - 1) +
         (B - 1) * ball_volume(q.n, static_cast<long>(q.dB) - 1);
}

inline void validate(const LinearSearchParams& q) {
  require(q.n >= 1 && q.n <= Word::kMaxLength, "luep: n out of range");
  require(q.kA + q.kB >= 1 && q.kA + q.kB <= q.n, "luep: need 1 <= kA + kB <= n");
  require(q.kA + q.kB <= 30, "luep: kA + kB must be <= 30 for exhaustive checking");
  require(q.dB >= 1 && (q.kA == 0 || q.dA >= q.dB), "luep: need dA >= dB >= 1");
}

/// Generator drawn for trial `trial`: i.i.d. fair bits from a Mersenne
/// twister seeded with (seed, trial). Identical on every platform.
inline GeneratorMatrix random_generator(const LinearSearchParams& q, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(q.seed), static_cast<std::uint32_t>(q.seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 engine(seq);
  GeneratorMatrix rows(q.kA + q.kB, Word(q.n));
  for (auto& row : rows) {
    std::uint64_t bits = 0;
    for (unsigned i = 0; i < q.n; ++i) {
      if (i % 64 == 0) bits = engine();
      row.set(i, (bits >> (i % 64)) & 1U);
    }
  }
  return rows;
}

/// Exhaustive check over all nonzero u: weight(uG) >= dA whenever the
/// class-A part of u is nonzero, and >= dB otherwise.
inline bool generator_meets_profile(const LinearSearchParams& q, const GeneratorMatrix& g) {
  const unsigned k = q.kA + q.kB;
  require(g.size() == k, "generator has wrong number of rows");
  // Gray-code walk; bit j of the counter is row j (class-A rows first).
  Word codeword(q.n);
  std::uint64_t gray = 0;
  const std::uint64_t a_mask = (std::uint64_t{1} << q.kA) - 1;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
    const auto bit = static_cast<unsigned>(std::countr_zero(i));
    gray ^= std::uint64_t{1} << bit;
    codeword ^= g[bit];
    const unsigned need = (gray & a_mask) ? q.dA : q.dB;
    if (codeword.weight() < need) return false;
  }
  return true;
}

inline LuepSearchResult random_luep_search(const LinearSearchParams& q) {
  validate(q);
  const Count budget = luep_budget(q);
  const Count space = pow2(q.n);
  if (budget >= space)
    fail(ErrorKind::kInvalidArgument, "luep: B(A-1)V(n,dA-1) + (B-1)V(n,dB-1) = " + budget.str() +
                                          " is not below 2^n = " + space.str());
  LuepSearchResult result;
  result.success_lower_bound = 1.0 - to_double(make_rational(budget, space));
  for (std::uint64_t t = 0; t < q.max_trials; ++t) {
    result.trials = t + 1;
    auto g = random_generator(q, t);
    if (generator_meets_profile(q, g)) {
      result.generator = std::move(g);
      return result;
    }
  }
  return result;
}

/// Codebook of the linear code: (a, b) -> uG with u = (bits of a, bits of b),
/// most significant bit first in each block.
inline UepCode luep_code(const LinearSearchParams& q, const GeneratorMatrix& g) {
  validate(q);
  require(q.kA + q.kB <= 20, "luep_code: codebook too large to list");
  UepCode code;
  code.n = q.n;
  code.shape = {std::size_t{1} << q.kA, std::size_t{1} << q.kB};
  code.profile = {q.kA ? q.dA : kUnbounded, q.kB ? q.dB : kUnbounded};
  for (std::size_t a = 0; a < code.shape[0]; ++a)
    for (std::size_t b = 0; b < code.shape[1]; ++b) {
      Word c(q.n);
      for (unsigned i = 0; i < q.kA; ++i)
        if ((a >> (q.kA - 1 - i)) & 1U) c ^= g[i];
      for (unsigned i = 0; i < q.kB; ++i)
        if ((b >> (q.kB - 1 - i)) & 1U) c ^= g[q.kA + i];
      code.book.push_back(c);
    }
  if (code.size() >= 2) code.profile = verify_profile(code);
  return code;
}

}  // namespace uep
