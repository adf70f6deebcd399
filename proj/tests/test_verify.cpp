#include "cb/pencil.hpp"
#include "cb/verify.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

namespace cb {
namespace {

using testing::frac;

SpecializedConfig random_specialized(Rng& rng) {
  for (;;) {
    SpecializedConfig s;
    for (auto& x : s.params) x = rng.uniform(-20, 20);
    if (s.config().degeneracy().nondegenerate()) return s;
  }
}

Rat minor_at(const SpecializedConfig& s, int minor_index, const Rat& u, const Rat& v) {
  const Config8 c = s.config();
  std::vector<ProjPoint> pts(c.points().begin(), c.points().end());
  pts.emplace_back(1, u, v);
  return ff_determinant(cubic_monomial_matrix(pts).without_col(minor_index - 1));
}

std::array<Rat, 10> chart_monomials(const Rat& u, const Rat& v) {
  return {1, u, v, u * u, u * v, v * v, u * u * u, u * u * v, u * v * v, v * v * v};
}

TEST(Specialized, BuildsFramePlusParameters) {
  const SpecializedConfig s{{2, 3, 5, 7, 11, 13, 17, 19}};
  const Config8 c = s.config();
  EXPECT_EQ(c(1), ProjPoint(1, 0, 0));
  EXPECT_EQ(c(4), ProjPoint(1, 1, 1));
  EXPECT_EQ(c(5), ProjPoint(1, 2, 3));
  EXPECT_EQ(c(8), ProjPoint(1, 17, 19));
}

// Interpolates the minor from ten numeric evaluations and compares every
// coefficient with the cofactor expansion.
TEST(MinorIdentities, CofactorsMatchInterpolation) {
  Rng rng(81);
  for (int trial = 0; trial < 3; ++trial) {
    const SpecializedConfig s = random_specialized(rng);
    for (int idx = 1; idx <= 10; ++idx) {
      RatMatrix a(10, 10);
      RatVector b(10);
      static constexpr std::array<std::array<int, 2>, 10> samples{
          {{0, 0}, {1, 0}, {0, 1}, {2, 3}, {-1, 4}, {3, -2}, {5, 7}, {-4, -3}, {6, 1}, {2, -7}}};
      for (int r = 0; r < 10; ++r) {
        const Rat u = samples[r][0], v = frac(samples[r][1], 3);
        const auto row = chart_monomials(u, v);
        for (int c = 0; c < 10; ++c) a(r, c) = row[c];
        b[r] = minor_at(s, idx, u, v);
      }
      // Solve a x = b through the augmented null space.
      RatMatrix aug(10, 11);
      for (int r = 0; r < 10; ++r) {
        for (int c = 0; c < 10; ++c) aug(r, c) = a(r, c);
        aug(r, 10) = -b[r];
      }
      const auto kernel = right_nullspace(aug);
      ASSERT_EQ(kernel.size(), 1u);
      ASSERT_NE(kernel[0][10], 0);
      const MinorIdentityData data = cofactors_A(s, idx);
      for (int c = 0; c < 10; ++c) EXPECT_EQ(data.expansion[c], kernel[0][c] / kernel[0][10]) << idx << "," << c;
      EXPECT_EQ(data.expansion[idx - 1], 0);
      EXPECT_EQ(data.minor_index, idx);
    }
  }
}

TEST(MinorIdentities, DegenerateMinorsAndChartPoint) {
  Rng rng(82);
  for (int trial = 0; trial < 10; ++trial) {
    const SpecializedConfig s = random_specialized(rng);
    const auto [u, v] = predicted_chart_point(s);
    for (int idx = 1; idx <= 10; ++idx) {
      const MinorIdentityData data = cofactors_A(s, idx);
      EXPECT_EQ(data.degenerate(), idx == 1 || idx == 7 || idx == 10) << idx;
      EXPECT_EQ(data.evaluate(u, v), 0) << idx;
      EXPECT_EQ(data.evaluate(3, -2), minor_at(s, idx, 3, -2));
    }
  }
}

TEST(MinorIdentities, ChartPointIsCertified) {
  Rng rng(83);
  const SpecializedConfig s = random_specialized(rng);
  const auto [u, v] = predicted_chart_point(s);
  EXPECT_TRUE(certify_p9(s.config(), ProjPoint(1, u, v)).certified());
}

TEST(MinorIdentities, RejectsOutOfRangeIndex) {
  const SpecializedConfig s{{2, 3, 5, 7, 11, 13, 17, 23}};
  EXPECT_THROW(cofactors_A(s, 0), std::invalid_argument);
  EXPECT_THROW(cofactors_A(s, 11), std::invalid_argument);
}

TEST(MinorIdentities, CoincidentParametersStillExpand) {
  // a = c, b = d puts P5 on P6; the data is well defined and vanishes.
  const SpecializedConfig s{{2, 3, 2, 3, 11, 13, 17, 23}};
  for (int idx = 1; idx <= 10; ++idx) {
    const auto data = cofactors_A(s, idx);
    EXPECT_TRUE(data.degenerate());
  }
  EXPECT_THROW(predicted_chart_point(s), std::domain_error);
}

TEST(IdentitySuite, AllIdentitiesPass) {
  for (const auto& name : identity_names()) {
    const VerifyReport r = run_identity_suite(name, 5, 20130101, 20);
    EXPECT_TRUE(r.passed()) << name << ": " << to_json(r).dump();
    EXPECT_EQ(r.trials, 5);
    EXPECT_EQ(r.identity, name);
  }
}

TEST(IdentitySuite, DeterministicForASeed) {
  EXPECT_EQ(to_json(run_identity_suite("cross-method", 4, 5, 30)).dump(),
            to_json(run_identity_suite("cross-method", 4, 5, 30)).dump());
}

TEST(IdentitySuite, RejectsUnknownNameAndBadTrialCount) {
  EXPECT_THROW(run_identity_suite("no-such-identity", 1, 1, 10), std::invalid_argument);
  EXPECT_THROW(run_identity_suite("cayley-identity", 0, 1, 10), std::invalid_argument);
}

}  // namespace
}  // namespace cb
