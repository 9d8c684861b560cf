#include <gtest/gtest.h>

#include "uep/bounds.hpp"
#include "uep/reference_lengths.hpp"

namespace {

using uep::Count;
using uep::make_rational;
using uep::TwoLevelParams;

TEST(SingleLevel, ClassicGv) {
  const auto r = uep::gv_classic(7, 3);
  EXPECT_EQ(r.exact_value, make_rational(128, 29));
  EXPECT_EQ(r.guaranteed_size, 5);
  EXPECT_EQ(r.direction, uep::Direction::kAchievability);
}

TEST(SingleLevel, ImprovedGv) {
  EXPECT_EQ(uep::gv_improved(7, 3).exact_value, make_rational(122, 23));
  EXPECT_EQ(uep::gv_improved(7, 3).guaranteed_size, 6);
  EXPECT_EQ(uep::gv_improved(4, 2).exact_value, make_rational(14, 3));
  EXPECT_EQ(uep::gv_improved(4, 2).guaranteed_size, 5);
}

TEST(SingleLevel, ImprovedNeverWorseThanClassic) {
  for (unsigned n = 2; n <= 40; ++n)
    for (unsigned d = 2; d <= n; ++d) {
      try {
        EXPECT_GE(uep::gv_improved(n, d).exact_value, uep::gv_classic(n, d).exact_value) << n << ' ' << d;
      } catch (const uep::Error& e) {
        EXPECT_EQ(e.kind(), uep::ErrorKind::kInfeasible);
      }
    }
}

TEST(Multilevel, Budget) {
  uep::UepParams p{7, {2, 4}, {3, 2}};
  EXPECT_EQ(uep::multilevel_budget(p), 4 * 29 + 3 * 8);
  uep::UepParams single{7, {16}, {3}};
  EXPECT_EQ(uep::multilevel_budget(single), 15 * 29);
  uep::UepParams bad{7, {2, 4}, {2, 3}};
  EXPECT_THROW(uep::multilevel_budget(bad), uep::Error);
}

TEST(TwoLevel, UnionBound) {
  const auto r = uep::uep_union_bound(TwoLevelParams{8, 4, 3, 2});
  EXPECT_EQ(r.exact_value, make_rational(229, 148));
  EXPECT_EQ(r.guaranteed_size, 2);
}

TEST(TwoLevel, EepAndHamming) {
  const TwoLevelParams p{8, 4, 3, 2};
  EXPECT_EQ(uep::eep_bound(p).exact_value, make_rational(64, 37));
  EXPECT_EQ(uep::eep_bound(p).guaranteed_size, 2);
  const auto ham = uep::hamming_converse(TwoLevelParams{8, 4, 4, 3});
  EXPECT_EQ(ham.exact_value, make_rational(64, 9));
  EXPECT_EQ(ham.guaranteed_size, 7);
  EXPECT_EQ(ham.direction, uep::Direction::kConverse);
  EXPECT_EQ(uep::hamming_converse(p).guaranteed_size, 64);
  EXPECT_EQ(uep::hamming_converse(p, uep::HammingRadius::kCeil).guaranteed_size, 7);
}

TEST(TwoLevel, RejectsBadParameters) {
  EXPECT_THROW(uep::uep_union_bound(TwoLevelParams{8, 4, 2, 2}), uep::Error);
  EXPECT_THROW(uep::uep_union_bound(TwoLevelParams{8, 0, 3, 2}), uep::Error);
  EXPECT_THROW(uep::uep_union_bound(TwoLevelParams{0, 4, 3, 2}), uep::Error);
}

TEST(TimeSharing, Allocation) {
  EXPECT_EQ(uep::ts_allocation(20, 8, 2).nB, 6u);
  EXPECT_EQ(uep::ts_allocation(20, 8, 2).nA, 14u);
  EXPECT_DOUBLE_EQ(uep::ts_allocation(20, 8, 2).alpha_star, 0.7);
  EXPECT_EQ(uep::ts_allocation(20, 1, 2).nB, 2u);
  // 2^m > 3 (m + 1) first holds at m = 4; 2^m >= 4 (m + 1) at m = 5.
  EXPECT_EQ(uep::ts_allocation(20, 4, 2, uep::SplitRule::kStrict).nB, 4u);
  EXPECT_EQ(uep::ts_allocation(20, 4, 2, uep::SplitRule::kNonStrict).nB, 5u);
  EXPECT_THROW(uep::ts_allocation(6, 1024, 2), uep::Error);
}

TEST(TimeSharing, ComponentBounds) {
  const auto [a, b] = uep::ts_gv(7, 4, 3, 2);
  EXPECT_EQ(a.exact_value, make_rational(122, 23));
  EXPECT_EQ(b.exact_value, make_rational(14, 3));
}

// Frozen from an independent rational-arithmetic evaluation of the formulas.
TEST(TwoLevel, CubeBoundFrozen) {
  EXPECT_EQ(uep::uep_cube_bound(TwoLevelParams{20, 8, 5, 3}).exact_value, make_rational(1080699, 49568));
  EXPECT_EQ(uep::uep_cube_bound(TwoLevelParams{20, 8, 5, 3}).guaranteed_size, 22);
  EXPECT_EQ(uep::uep_cube_bound(TwoLevelParams{24, 4, 5, 2}).exact_value, make_rational(18141109, 51804));
  EXPECT_EQ(uep::uep_cube_bound(TwoLevelParams{30, 16, 7, 3}).guaranteed_size, 91);
  EXPECT_EQ(uep::uep_cube_bound(TwoLevelParams{16, 2, 4, 2}).exact_value, make_rational(72053, 1394));
}

TEST(TwoLevel, CubeBoundInfeasibleWhenClassAIsTooShort) {
  try {
    uep::uep_cube_bound(TwoLevelParams{8, 16, 5, 2});
    FAIL() << "expected infeasible";
  } catch (const uep::Error& e) {
    EXPECT_EQ(e.kind(), uep::ErrorKind::kInfeasible);
  }
}

TEST(TwoLevel, PackingPlanFrozen) {
  const auto a = uep::packing_plan(TwoLevelParams{20, 8, 5, 3});
  EXPECT_EQ(a.rV, 4u);
  EXPECT_EQ(a.rS, 7u);
  EXPECT_EQ(a.mS_lower, 2);
  EXPECT_EQ(a.mS_upper, 7);
  const auto b = uep::packing_plan(TwoLevelParams{24, 4, 5, 2});
  EXPECT_EQ(b.rV, 2u);
  EXPECT_EQ(b.rS, 5u);
  EXPECT_EQ(b.mS_lower, 4);
  EXPECT_EQ(b.mS_upper, 302);
}

TEST(TwoLevel, BallBoundsFrozen) {
  EXPECT_EQ(uep::uep_ball_bound(TwoLevelParams{20, 8, 5, 3}).exact_value, make_rational(1060539, 49568));
  EXPECT_EQ(uep::uep_enlargement_bound(TwoLevelParams{20, 8, 5, 3}).exact_value, make_rational(631205, 49568));
  EXPECT_EQ(uep::uep_ball_bound(TwoLevelParams{24, 4, 5, 2}).exact_value, make_rational(16826293, 51804));
  EXPECT_EQ(uep::uep_enlargement_bound(TwoLevelParams{24, 4, 5, 2}).exact_value, make_rational(5408975, 17268));
  EXPECT_EQ(uep::uep_ball_bound(TwoLevelParams{30, 16, 7, 3}).guaranteed_size, 88);
  EXPECT_EQ(uep::uep_enlargement_bound(TwoLevelParams{30, 16, 7, 3}).guaranteed_size, 81);
}

TEST(TwoLevel, OptimisticPackingIsLabelled) {
  const TwoLevelParams p{24, 4, 5, 2};
  const auto r = uep::uep_ball_bound(p, uep::PackingEstimate::kOptimistic);
  EXPECT_NE(r.name.find("non-certified"), std::string::npos);
  EXPECT_GE(r.exact_value, uep::uep_ball_bound(p).exact_value);
  EXPECT_EQ(uep::uep_ball_bound(p).name.find("non-certified"), std::string::npos);
}

TEST(TwoLevel, AchievabilityNeverExceedsConverse) {
  for (unsigned n = 6; n <= 40; n += 2)
    for (unsigned log2B = 0; log2B <= 6; ++log2B)
      for (unsigned dB = 1; dB <= 4; ++dB)
        for (unsigned dA = dB + 1; dA <= dB + 5; ++dA) {
          const TwoLevelParams p{n, uep::pow2(log2B), dA, dB};
          const Count ham = uep::hamming_converse(p).guaranteed_size;
          EXPECT_LE(uep::uep_union_bound(p).guaranteed_size, ham);
          try {
            EXPECT_LE(uep::uep_cube_bound(p).guaranteed_size, ham) << n << ' ' << log2B << ' ' << dA << ' ' << dB;
          } catch (const uep::Error& e) {
            EXPECT_EQ(e.kind(), uep::ErrorKind::kInfeasible);
          }
        }
}

TEST(MinimumLength, TimeSharingReproducesReferenceRows) {
  for (const auto& row : uep::reference_rows())
    EXPECT_EQ(uep::min_length_ts(row.log2A, row.log2B, row.dA, row.dB), row.ts_gv)
        << row.log2A << ' ' << row.log2B << ' ' << row.dA << ' ' << row.dB;
}

TEST(MinimumLength, ImprovedComponentsAreNeverLonger) {
  for (const auto& row : uep::reference_rows())
    EXPECT_LE(uep::min_length_ts(row.log2A, row.log2B, row.dA, row.dB, uep::TsComponentBound::kImproved), row.ts_gv);
}

TEST(MinimumLength, UepIsMonotoneInTheTarget) {
  EXPECT_LE(uep::min_length_uep(2, 3, 5, 4), uep::min_length_uep(3, 3, 5, 4));
  EXPECT_LE(uep::min_length_uep(2, 3, 5, 4), uep::min_length_uep(2, 4, 5, 4));
  EXPECT_EQ(uep::min_length_uep(2, 3, 5, 4), 16u);
  EXPECT_EQ(uep::min_length_uep(4, 5, 3, 2), 16u);
}

TEST(FixedDistance, ExactRatioTracksApproximation) {
  const auto r = uep::ratio_fixed_distance(TwoLevelParams{200, 16, 4, 2});
  EXPECT_EQ(r.split.nB, 7u);
  EXPECT_NEAR(r.exact_value, 7.18, 0.01);
  EXPECT_NEAR(r.approx, 6.29, 0.01);
  EXPECT_NEAR(r.exact_value / r.approx, 1.0, 0.25);
}

}  // namespace
