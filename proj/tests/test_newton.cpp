#include "cb/cbpoint.hpp"
#include "cb/newton.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <set>

namespace cb {
namespace {

Config8 with_frame(const std::array<std::array<Rat, 3>, 4>& c) {
  auto p = [&](int i) { return ProjPoint(c[i][0], c[i][1], c[i][2]); };
  return Config8({ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(0, 0, 1), ProjPoint(1, 1, 1), p(0),
                  p(1), p(2), p(3)});
}

Rat ingredient(const CBIngredients& in, Factor f) {
  switch (f) {
    case Factor::Cx: return in.cx;
    case Factor::Cy: return in.cy;
    case Factor::Cz: return in.cz;
    case Factor::Dx: return in.dx;
    case Factor::Dy: return in.dy;
    case Factor::Dz: return in.dz;
  }
  return 0;
}

ExponentVector swap_coords(ExponentVector e, int a, int b) {
  for (int i = 0; i < 4; ++i) std::swap(e[3 * i + a], e[3 * i + b]);
  return e;
}

ExponentVector pt(int a, int b) { return {a, b, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}; }

// Strict 2D hull size by monotone chain; collinear boundary points excluded.
std::size_t hull_size_2d(std::vector<std::pair<long, long>> p) {
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() < 3) return p.size();
  auto cross = [](auto o, auto a, auto b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<long, long>> h(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  return k - 1;
}

TEST(ExpandFactor, AgreesWithExactDeterminants) {
  Rng rng(71);
  for (Factor f : kAllFactors) {
    const SparsePoly poly = expand_factor(f);
    for (int trial = 0; trial < 5; ++trial) {
      std::array<std::array<Rat, 3>, 4> c;
      for (auto& p : c)
        for (auto& x : p) x = testing::frac(rng.uniform(-9, 9), rng.uniform(1, 4));
      EXPECT_EQ(evaluate(poly, c), ingredient(ingredients(with_frame(c), {1, 2, 3}), f)) << factor_name(f);
    }
  }
}

TEST(NewtonSupport, BlockDegrees) {
  for (Factor f : kAllFactors) {
    const int degree = (f == Factor::Cx || f == Factor::Cy || f == Factor::Cz) ? 2 : 3;
    const auto support = newton_support(f);
    ASSERT_FALSE(support.empty());
    EXPECT_TRUE(std::is_sorted(support.begin(), support.end()));
    for (const auto& e : support)
      for (int i = 0; i < 4; ++i) EXPECT_EQ(e[3 * i] + e[3 * i + 1] + e[3 * i + 2], degree);
  }
}

TEST(NewtonSupport, FamiliesAreCoordinateRelabellings) {
  auto image = [](Factor f, int a, int b) {
    std::set<ExponentVector> s;
    for (const auto& e : newton_support(f)) s.insert(swap_coords(e, a, b));
    return s;
  };
  auto as_set = [](Factor f) {
    const auto v = newton_support(f);
    return std::set<ExponentVector>(v.begin(), v.end());
  };
  EXPECT_EQ(image(Factor::Cx, 0, 1), as_set(Factor::Cy));
  EXPECT_EQ(image(Factor::Cx, 0, 2), as_set(Factor::Cz));
  EXPECT_EQ(image(Factor::Dx, 0, 1), as_set(Factor::Dy));
  EXPECT_EQ(image(Factor::Dx, 0, 2), as_set(Factor::Dz));
}

TEST(VertexCount, SmallExamples) {
  EXPECT_EQ(newton_vertex_count({pt(0, 0)}), 1u);
  EXPECT_EQ(newton_vertex_count({pt(0, 0), pt(1, 0), pt(2, 0)}), 2u);
  EXPECT_EQ(newton_vertex_count({pt(0, 0), pt(2, 0), pt(0, 2), pt(2, 2), pt(1, 1)}), 4u);
  EXPECT_EQ(newton_vertex_count({pt(0, 0), pt(2, 0), pt(0, 2), pt(1, 1)}), 3u);
}

TEST(VertexCount, MatchesPlanarHull) {
  Rng rng(72);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::pair<long, long>> raw;
    std::set<ExponentVector> pts;
    const int n = rng.uniform(1, 25);
    for (int i = 0; i < n; ++i) {
      const long a = rng.uniform(0, 6), b = rng.uniform(0, 6);
      raw.emplace_back(a, b);
      pts.insert(pt(a, b));
    }
    const std::vector<ExponentVector> support(pts.begin(), pts.end());
    EXPECT_EQ(newton_vertex_count(support), hull_size_2d(raw));
  }
}

TEST(VertexCount, InvariantUnderTranslationAndPermutation) {
  Rng rng(73);
  for (int trial = 0; trial < 10; ++trial) {
    std::set<ExponentVector> pts;
    for (int i = 0; i < 20; ++i) {
      ExponentVector e{};
      for (int k = 0; k < 4; ++k) e[k] = rng.uniform(0, 3);
      pts.insert(e);
    }
    std::vector<ExponentVector> a(pts.begin(), pts.end()), b;
    for (auto e : a) {
      std::rotate(e.begin(), e.begin() + 1, e.end());
      for (auto& x : e) x += 5;
      b.push_back(e);
    }
    std::reverse(b.begin(), b.end());
    EXPECT_EQ(newton_vertex_count(a), newton_vertex_count(b));
  }
}

}  // namespace
}  // namespace cb
