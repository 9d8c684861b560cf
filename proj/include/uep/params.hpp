#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "uep/count.hpp"
#include "uep/error.hpp"

namespace uep {

/// Multi-level problem: sizes A_1..A_m with distances d_1 >= ... >= d_m.
struct UepParams {
  unsigned n = 0;
  std::vector<Count> sizes;
  std::vector<unsigned> distances;

  std::size_t levels() const { return sizes.size(); }

  void validate() const {
    require(!sizes.empty(), "UepParams: at least one level required");
    require(sizes.size() == distances.size(), "UepParams: sizes and distances differ in length");
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      require(sizes[i] >= 1, "UepParams: level sizes must be >= 1");
      require(distances[i] >= 1, "UepParams: distances must be >= 1");
      if (i > 0) require(distances[i - 1] >= distances[i], "UepParams: distances must be nonincreasing");
    }
  }
};

/// Two-level problem (n, ·, B, d_A, d_B) with d_A > d_B >= 1. The class-A
/// size is what the bounds solve for.
struct TwoLevelParams {
  unsigned n = 0;
  Count B = 1;
  unsigned dA = 2;
  unsigned dB = 1;

  void validate() const {
    require(n >= 1, "TwoLevelParams: n must be >= 1");
    require(B >= 1, "TwoLevelParams: B must be >= 1");
    require(dB >= 1, "TwoLevelParams: dB must be >= 1");
    require(dA > dB, "TwoLevelParams: need dA > dB");
  }

  double rate_B() const { return log2_of(B) / n; }
};

}  // namespace uep
