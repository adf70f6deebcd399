#include "cb/tropical.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

namespace cb {

void PrintTo(const TropValue& v, std::ostream* os) { *os << to_string(v); }

namespace {

const TropValue kInf = TropValue::infinity();

TropMatrix make(std::initializer_list<std::initializer_list<TropValue>> rows) {
  TropMatrix m(rows.size(), rows.begin()->size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (const auto& v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

// Minimum over all permutations and the number of permutations attaining it.
std::pair<TropValue, int> brute_force(const TropMatrix& m) {
  std::vector<int> p(m.rows());
  std::iota(p.begin(), p.end(), 0);
  TropValue best = kInf;
  int count = 0;
  do {
    TropValue sum = Rat(0);
    for (std::size_t r = 0; r < m.rows(); ++r) sum = otimes(sum, m(r, p[r]));
    if (!sum.finite()) continue;
    if (sum < best) {
      best = sum;
      count = 1;
    } else if (sum == best) {
      ++count;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return {best, count};
}

TEST(Semiring, MinPlusOperations) {
  EXPECT_EQ(oplus(Rat(3), Rat(-1)), TropValue(Rat(-1)));
  EXPECT_EQ(oplus(kInf, Rat(2)), TropValue(Rat(2)));
  EXPECT_EQ(otimes(Rat(3), Rat(-1)), TropValue(Rat(2)));
  EXPECT_FALSE(otimes(kInf, Rat(2)).finite());
  EXPECT_EQ(to_string(kInf), "inf");
  EXPECT_EQ(to_string(TropValue(Rat(-3, 2))), "-3/2");
}

TEST(TropicalDeterminant, Examples) {
  auto d = tropical_determinant(make({{0, 1}, {1, 0}}));
  EXPECT_EQ(d.value, TropValue(0L));
  EXPECT_TRUE(d.unique);
  EXPECT_EQ(d.assignment, (std::vector<int>{0, 1}));

  d = tropical_determinant(make({{0, 0}, {0, 0}}));
  EXPECT_EQ(d.value, TropValue(0L));
  EXPECT_FALSE(d.unique);

  d = tropical_determinant(make({{kInf, 1}, {2, kInf}}));
  EXPECT_EQ(d.value, TropValue(3L));
  EXPECT_TRUE(d.unique);
  EXPECT_EQ(d.assignment, (std::vector<int>{1, 0}));

  d = tropical_determinant(make({{kInf, kInf}, {1, 2}}));
  EXPECT_FALSE(d.value.finite());
  EXPECT_FALSE(d.unique);
}

TEST(TropicalDeterminant, EqualRowsAreNeverUnique) {
  const auto d = tropical_determinant(make({{1, 5, 2}, {1, 5, 2}, {0, 3, 7}}));
  EXPECT_FALSE(d.unique);
}

TEST(TropicalDeterminant, MatchesBruteForce) {
  Rng rng(61);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 60; ++trial) {
      TropMatrix m(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          m(r, c) = rng.uniform(0, 9) == 0 ? kInf : TropValue(testing::frac(rng.uniform(-4, 4), rng.uniform(1, 2)));
      const auto [value, count] = brute_force(m);
      const auto d = tropical_determinant(m);
      EXPECT_EQ(d.value, value);
      EXPECT_EQ(d.unique, count == 1);
      if (value.finite()) {
        TropValue sum = Rat(0);
        for (std::size_t r = 0; r < n; ++r) sum = otimes(sum, m(r, d.assignment[r]));
        EXPECT_EQ(sum, value);
      }
    }
  }
}

TEST(PadicValuation, Examples) {
  EXPECT_EQ(padic_valuation(12, 2), 2);
  EXPECT_EQ(padic_valuation(Rat(5, 9), 3), -2);
  EXPECT_EQ(padic_valuation(Rat(-7, 4), 7), 1);
  EXPECT_EQ(padic_valuation(1, 5), 0);
  EXPECT_FALSE(padic_valuation(0, 2).has_value());
}

// val(det) >= trop det of valuations, with equality when the minimizer is unique.
TEST(TropicalDeterminant, UltrametricSoundnessOnRandomMatrices) {
  Rng rng(62);
  for (std::int64_t p : {2, 3, 5}) {
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = rng.uniform(2, 5);
      RatMatrix a(n, n);
      TropMatrix t(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          const auto e = rng.uniform(-2, 2);
          const Rat unit = (rng.uniform(0, 1) ? 1 : -1) * (rng.uniform(1, p - 1) + p * rng.uniform(0, 2));
          a(r, c) = unit * pow(Rat(p), e + 2) / pow(Rat(p), 2);
          t(r, c) = Rat(e);
        }
      const auto d = tropical_determinant(t);
      const auto v = padic_valuation(ff_determinant(a), p);
      if (!v) {
        EXPECT_FALSE(d.unique);
        continue;
      }
      EXPECT_GE(Rat(*v), d.value.value());
      if (d.unique) EXPECT_EQ(Rat(*v), d.value.value());
    }
  }
}

TropConfig tconfig(const std::array<std::array<long, 3>, 4>& w) {
  TropConfig t;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 3; ++k) t.points[i][k] = Rat(w[i][k]);
  return t;
}

TEST(TropicalP9, ZeroValuationsGiveOrigin) {
  const TropP9 r = tropical_p9(tconfig({}));
  EXPECT_EQ(r.u, 0);
  EXPECT_EQ(r.v, 0);
  for (const auto& f : r.factors) EXPECT_EQ(f.value, TropValue(0L));
}

TEST(TropicalP9, InvariantUnderRescalingAPoint) {
  Rng rng(63);
  for (int trial = 0; trial < 20; ++trial) {
    std::array<std::array<long, 3>, 4> w;
    for (auto& p : w)
      for (auto& x : p) x = rng.uniform(-3, 3);
    const TropP9 base = tropical_p9(tconfig(w));
    const int which = rng.uniform(0, 3);
    const long shift = rng.uniform(-5, 5);
    for (auto& x : w[which]) x += shift;
    const TropP9 shifted = tropical_p9(tconfig(w));
    EXPECT_EQ(shifted.u, base.u);
    EXPECT_EQ(shifted.v, base.v);
  }
}

TEST(TropicalP9, PositivelyHomogeneous) {
  Rng rng(64);
  for (int trial = 0; trial < 20; ++trial) {
    std::array<std::array<long, 3>, 4> w, w3;
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 3; ++k) {
        w[i][k] = rng.uniform(-4, 4);
        w3[i][k] = 3 * w[i][k];
      }
    const TropP9 a = tropical_p9(tconfig(w));
    const TropP9 b = tropical_p9(tconfig(w3));
    EXPECT_EQ(b.u, 3 * a.u);
    EXPECT_EQ(b.v, 3 * a.v);
  }
}

TEST(TropicalP9, InfiniteFactorThrows) {
  // P5 tropically equal to P1 leaves Cx with no finite permutation.
  TropConfig t = tconfig({});
  t.points[0][1] = kInf;
  t.points[0][2] = kInf;
  EXPECT_THROW(tropical_p9(t), std::domain_error);
  for (auto& x : t.points[0]) x = kInf;
  EXPECT_THROW(tropical_p9(t), std::invalid_argument);
}

TEST(ValuationTrial, GenericUnitsAgree) {
  // Distinct valuations in x and y keep every factor's minimizer unique here
  // or report the ties honestly.
  const std::array<std::array<Rat, 3>, 4> coords{{{1, 2, 3}, {1, 5, 7}, {1, 11, 13}, {1, 17, 23}}};
  const auto t = valuation_trial(coords, 5);
  ASSERT_TRUE(t.has_value());
  EXPECT_TRUE(t->factors_sound);
  if (t->all_unique) EXPECT_TRUE(t->agrees);
  if (!t->agrees) EXPECT_TRUE(t->cancellation);
}

TEST(ValuationTrial, VanishingFactorIsSkipped) {
  // P5 = P6 makes Cx vanish.
  const std::array<std::array<Rat, 3>, 4> coords{{{1, 2, 3}, {1, 2, 3}, {1, 11, 13}, {1, 17, 23}}};
  EXPECT_FALSE(valuation_trial(coords, 3).has_value());
}

TEST(ValuationAgreement, ReportIsConsistentAndDeterministic) {
  for (std::int64_t p : {2, 3}) {
    const ValuationReport r = valuation_agreement(p, 25, 99);
    EXPECT_EQ(r.trials, 25);
    EXPECT_EQ(r.factor_soundness_violations, 0);
    EXPECT_EQ(r.unexplained_disagreements, 0);
    EXPECT_EQ(r.unique_disagreements, 0);
    int agreements = 0;
    for (const auto& d : r.details) {
      agreements += d.agrees;
      if (!d.agrees) EXPECT_TRUE(d.cancellation);
    }
    EXPECT_EQ(agreements, r.agreements);
    EXPECT_EQ(to_json(r).dump(), to_json(valuation_agreement(p, 25, 99)).dump());
  }
}

TEST(Factors, NamesRoundTrip) {
  for (Factor f : kAllFactors) EXPECT_EQ(parse_factor(factor_name(f)), f);
  EXPECT_FALSE(parse_factor("Ex").has_value());
}

}  // namespace
}  // namespace cb
