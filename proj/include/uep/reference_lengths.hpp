#pragma once

// Short-blocklength comparison of GV time sharing against cube-hosted UEP.

#include <array>
#include <future>
#include <vector>

#include "uep/bounds.hpp"

namespace uep {

struct LengthRow {
  unsigned log2A = 0;
  unsigned log2B = 0;
  unsigned dA = 0;
  unsigned dB = 0;
  unsigned ts_gv = 0;       // GV time sharing
  unsigned uep_cube = 0;    // cube-hosted UEP bound
  // Published external values, echoed for comparison only (never computed):
  unsigned ts_best_ref = 0; // best-known time-sharing length (code tables)
  unsigned luep_ref = 0;    // optimal linear UEP length
};

/// The eight reference rows with their published time-sharing and UEP lengths.
inline const std::array<LengthRow, 8>& reference_rows() {
  static const std::array<LengthRow, 8> rows{{
      {2, 3, 5, 4, 22, 16, 15, 11},
      {2, 4, 5, 4, 24, 18, 16, 12},
      {2, 3, 6, 4, 24, 17, 16, 12},
      {4, 5, 3, 2, 19, 16, 13, 12},
      {4, 6, 4, 2, 23, 14, 15, 14},
      {2, 4, 7, 4, 28, 20, 19, 15},
      {4, 7, 4, 2, 24, 15, 16, 15},
      {4, 8, 3, 2, 22, 20, 16, 15},
  }};
  return rows;
}

struct LengthOptions {
  SplitRule split = SplitRule::kNonStrict;
  TsComponentBound ts_bound = TsComponentBound::kClassic;
};

inline LengthRow compute_lengths(unsigned log2A, unsigned log2B, unsigned dA, unsigned dB, LengthOptions opt = {}) {
  LengthRow row{log2A, log2B, dA, dB};
  row.ts_gv = min_length_ts(log2A, log2B, dA, dB, opt.ts_bound);
  row.uep_cube = min_length_uep(log2A, log2B, dA, dB, opt.split);
  return row;
}

/// Recomputes every reference row (rows evaluated concurrently, returned in
/// order). External columns are copied from the reference.
inline std::vector<LengthRow> compute_reference_lengths(LengthOptions opt = {}) {
  std::vector<std::future<LengthRow>> jobs;
  for (const auto& ref : reference_rows())
    jobs.push_back(std::async(std::launch::async, [ref, opt] {
      LengthRow row = compute_lengths(ref.log2A, ref.log2B, ref.dA, ref.dB, opt);
      row.ts_best_ref = ref.ts_best_ref;
      row.luep_ref = ref.luep_ref;
      return row;
    }));
  std::vector<LengthRow> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace uep
