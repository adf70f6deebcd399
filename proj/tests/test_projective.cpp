#include "cb/projective.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

namespace cb {
namespace {

using testing::leibniz_determinant;

std::array<ProjPoint, 6> six(Rng& rng, std::int64_t bound) {
  auto p = [&] { return rng.integer_point(bound); };
  return {p(), p(), p(), p(), p(), p()};
}

std::array<ProjPoint, 7> seven_of(const std::array<ProjPoint, 8>& pts) {
  return {pts[1], pts[2], pts[3], pts[4], pts[5], pts[6], pts[7]};
}

TEST(ProjPoint, RejectsZeroVector) { EXPECT_THROW(ProjPoint(0, 0, 0), std::invalid_argument); }

TEST(ProjPoint, CanonicalFormAndProjectiveEquality) {
  EXPECT_EQ(canonical(ProjPoint(Rat(-1, 2), 1, Rat(3, 4))), ProjPoint(2, -4, -3));
  EXPECT_EQ(canonical(ProjPoint(0, -6, 4)), ProjPoint(0, 3, -2));
  EXPECT_TRUE(same_point(ProjPoint(1, 2, 3), ProjPoint(-2, -4, -6)));
  EXPECT_FALSE(same_point(ProjPoint(1, 2, 3), ProjPoint(1, 2, 4)));
  EXPECT_THROW(canonical(std::array<Rat, 3>{0, 0, 0}), std::domain_error);
  EXPECT_EQ(to_string(ProjPoint(1, Rat(-1, 2), 0)), "(1:-1/2:0)");
}

TEST(Bracket, Examples) {
  EXPECT_EQ(bracket(ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(0, 0, 1)), 1);
  EXPECT_EQ(bracket(ProjPoint(0, 1, 0), ProjPoint(1, 0, 0), ProjPoint(0, 0, 1)), -1);
  EXPECT_EQ(bracket(ProjPoint(1, 2, 3), ProjPoint(4, 5, 6), ProjPoint(7, 8, 10)), -3);
  EXPECT_EQ(bracket(ProjPoint(1, 0, 1), ProjPoint(1, 1, 1), ProjPoint(1, 5, 1)), 0);
}

TEST(Transform, AppliesMatrixAndRejectsSingular) {
  const ProjTransform t(RatMatrix{{1, 1, 0}, {0, 1, 0}, {0, 0, 2}});
  EXPECT_EQ(t.det(), 2);
  EXPECT_EQ(apply_transform(t, ProjPoint(1, 2, 3)), ProjPoint(3, 2, 6));
  const ProjTransform singular(RatMatrix{{1, 2, 3}, {2, 4, 6}, {0, 0, 1}});
  EXPECT_THROW(apply_transform(singular, ProjPoint(1, 0, 0)), std::domain_error);
}

TEST(Bracket, ScalesByDeterminant) {
  Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const ProjTransform t = rng.transform(5);
    const ProjPoint a = rng.integer_point(9), b = rng.integer_point(9), c = rng.integer_point(9);
    EXPECT_EQ(bracket(apply_transform(t, a), apply_transform(t, b), apply_transform(t, c)),
              t.det() * bracket(a, b, c));
  }
}

TEST(ConicDet, PointsOnParabolaVanish) {
  std::array<ProjPoint, 6> pts{ProjPoint(1, 0, 0), ProjPoint(1, 1, 1), ProjPoint(1, 2, 4),
                               ProjPoint(1, 3, 9), ProjPoint(1, 4, 16), ProjPoint(1, 5, 25)};
  EXPECT_EQ(conic_det(pts), 0);
  pts[5] = ProjPoint(1, 5, 26);
  EXPECT_NE(conic_det(pts), 0);
}

TEST(ConicDet, VanishesOnTransformedConics) {
  Rng rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const ProjTransform t = rng.transform(6);
    std::array<ProjPoint, 6> pts{ProjPoint(1, 0, 0), ProjPoint(1, 0, 0), ProjPoint(1, 0, 0),
                                 ProjPoint(1, 0, 0), ProjPoint(1, 0, 0), ProjPoint(1, 0, 0)};
    for (auto& p : pts) {
      const Rat s = rng.uniform(-9, 9), u = rng.uniform(1, 9);
      p = apply_transform(t, ProjPoint(s * s, s * u, u * u));
    }
    EXPECT_EQ(conic_det(pts), 0);
  }
}

TEST(ConicDet, MatchesLeibnizOracle) {
  Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const auto pts = six(rng, 9);
    RatMatrix m(6, 6);
    for (std::size_t r = 0; r < 6; ++r) {
      const auto& p = pts[r];
      const std::array<Rat, 6> row{p.x() * p.x(), p.x() * p.y(), p.x() * p.z(),
                                   p.y() * p.y(), p.y() * p.z(), p.z() * p.z()};
      for (std::size_t c = 0; c < 6; ++c) m(r, c) = row[c];
    }
    EXPECT_EQ(conic_det(pts), leibniz_determinant(m));
  }
}

TEST(ConicDet, BracketExpansionAgrees) {
  Rng rng(24);
  for (int trial = 0; trial < 120; ++trial) {
    const auto pts = six(rng, 30);
    EXPECT_EQ(conic_det(pts), conic_bracket_expansion(pts));
  }
}

TEST(ConicDet, HomogeneousOfDegreeTwoInEachPoint) {
  Rng rng(25);
  auto pts = six(rng, 20);
  const Rat base = conic_det(pts);
  pts[3] = pts[3].scaled(Rat(-5, 3));
  EXPECT_EQ(conic_det(pts), Rat(25, 9) * base);
}

TEST(ConicDet, EquivariantWithFourthPowerOfDeterminant) {
  Rng rng(26);
  for (int trial = 0; trial < 20; ++trial) {
    const ProjTransform t = rng.transform(5);
    auto pts = six(rng, 10);
    const Rat before = conic_det(pts);
    for (auto& p : pts) p = apply_transform(t, p);
    EXPECT_EQ(conic_det(pts), pow(t.det(), 4) * before);
  }
}

// Nodal cubic z*q(x, y) + g(x, y) singular at (0:0:1): the line y = t x meets
// it again at x = -q(1, t) / g(1, t).
TEST(SingularCubicDet, VanishesOnNodalCubics) {
  Rng rng(27);
  int checked = 0;
  for (int trial = 0; trial < 15; ++trial) {
    std::array<Rat, 3> q;
    std::array<Rat, 4> g;
    for (auto& a : q) a = rng.uniform(-5, 5);
    for (auto& a : g) a = rng.uniform(-5, 5);
    const ProjTransform t = rng.transform(4);
    std::vector<ProjPoint> on;
    for (int s = -6; on.size() < 7 && s <= 6; ++s) {
      const Rat tt = testing::frac(s, 2);
      const Rat qv = q[0] + q[1] * tt + q[2] * tt * tt;
      const Rat gv = g[0] + g[1] * tt + g[2] * tt * tt + g[3] * tt * tt * tt;
      if (gv == 0 || qv == 0) continue;
      const Rat x = -qv / gv;
      on.push_back(apply_transform(t, ProjPoint(x, tt * x, 1)));
    }
    if (on.size() < 7) continue;
    const ProjPoint node = apply_transform(t, ProjPoint(0, 0, 1));
    std::array<ProjPoint, 7> rest{on[0], on[1], on[2], on[3], on[4], on[5], on[6]};
    EXPECT_EQ(singular_cubic_det(node, rest), 0);
    ++checked;
  }
  EXPECT_GE(checked, 10);
}

TEST(SingularCubicDet, BracketExpansionAgrees) {
  Rng rng(28);
  for (int trial = 0; trial < 60; ++trial) {
    const auto pts = rng.integer_config(15).points();
    // Expansion is D(P7; P1, ..., P6, P8).
    const std::array<ProjPoint, 7> rest{pts[0], pts[1], pts[2], pts[3], pts[4], pts[5], pts[7]};
    EXPECT_EQ(singular_cubic_det(pts[6], rest), singular_cubic_bracket_expansion(pts));
  }
}

TEST(SingularCubicDet, HomogeneityDegrees) {
  Rng rng(29);
  const auto pts = rng.integer_config(10).points();
  auto rest = seven_of(pts);
  const Rat base = singular_cubic_det(pts[0], rest);
  EXPECT_EQ(singular_cubic_det(pts[0].scaled(2), rest), 64 * base);
  rest[4] = rest[4].scaled(-3);
  EXPECT_EQ(singular_cubic_det(pts[0], rest), -27 * base);
}

TEST(SingularCubicDet, EquivariantWithNinthPowerOfDeterminant) {
  Rng rng(30);
  for (int trial = 0; trial < 15; ++trial) {
    const ProjTransform t = rng.transform(4);
    const auto pts = rng.integer_config(8).points();
    const Rat before = singular_cubic_det(pts[0], seven_of(pts));
    std::array<ProjPoint, 8> moved = pts;
    for (auto& p : moved) p = apply_transform(t, p);
    EXPECT_EQ(singular_cubic_det(moved[0], seven_of(moved)), pow(t.det(), 9) * before);
  }
}

TEST(CrossRatio, HarmonicQuadrupleIsMinusOne) {
  const ProjPoint base(0, 0, 1);
  const std::array<ProjPoint, 4> q{ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(1, 1, 0),
                                   ProjPoint(1, -1, 0)};
  EXPECT_EQ(cross_ratio_lines(base, q), -1);
}

TEST(CrossRatio, RepeatedPointGivesZeroAndDegenerateDenominatorThrows) {
  const ProjPoint base(0, 0, 1);
  const std::array<ProjPoint, 4> q{ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(1, 0, 0),
                                   ProjPoint(1, 2, 0)};
  EXPECT_EQ(cross_ratio_lines(base, q), 0);
  const std::array<ProjPoint, 4> bad{ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(1, 2, 0),
                                     ProjPoint(1, 0, 0)};
  try {
    cross_ratio_lines(base, bad);
    FAIL() << "expected DegenerateCrossRatio";
  } catch (const DegenerateCrossRatio& e) {
    EXPECT_EQ(e.which(), "[base,q1,q4]");
  }
}

TEST(CrossRatio, InvariantUnderTransforms) {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const ProjTransform t = rng.transform(5);
    const auto pts = rng.nondegenerate_config(10).points();
    const std::array<ProjPoint, 4> q{pts[4], pts[5], pts[6], pts[7]};
    const std::array<ProjPoint, 4> quad{pts[0], pts[1], pts[2], pts[3]};
    std::array<ProjPoint, 4> tq = q, tquad = quad;
    for (auto& p : tq) p = apply_transform(t, p);
    for (auto& p : tquad) p = apply_transform(t, p);
    EXPECT_EQ(cross_ratio_lines(apply_transform(t, pts[0]), tq), cross_ratio_lines(pts[0], q));
    EXPECT_EQ(cross_ratio_conics(tquad, tq), cross_ratio_conics(quad, q));
    // Invariant under rescaling representatives too.
    tq[2] = tq[2].scaled(7);
    EXPECT_EQ(cross_ratio_conics(tquad, tq), cross_ratio_conics(quad, q));
  }
}

}  // namespace
}  // namespace cb
