#include "cb/tropical.hpp"

#include "cb/cbpoint.hpp"
#include "cb/random.hpp"

#include <algorithm>

namespace cb {

TropValue oplus(const TropValue& a, const TropValue& b) { return b < a ? b : a; }

TropValue otimes(const TropValue& a, const TropValue& b) {
  if (!a.finite() || !b.finite()) return TropValue::infinity();
  return TropValue(a.value() + b.value());
}

std::string to_string(const TropValue& v) { return v.finite() ? to_string(v.value()) : "inf"; }

namespace {

// Minimum-cost perfect assignment on a dense n x n matrix of finite costs.
// Returns row -> column.
std::vector<int> hungarian(const std::vector<Rat>& cost, int n) {
  std::vector<Rat> u(n + 1), v(n + 1);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<Rat> minv(n + 1);
    std::vector<bool> has_min(n + 1, false), used(n + 1, false);
    do {
      used[j0] = true;
      const int i0 = p[j0];
      Rat delta;
      int j1 = -1;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        Rat cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (!has_min[j] || cur < minv[j]) {
          minv[j] = cur;
          has_min[j] = true;
          way[j] = j0;
        }
        if (j1 < 0 || minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> match(n);
  for (int j = 1; j <= n; ++j) match[p[j] - 1] = j - 1;
  return match;
}

Rat assignment_cost(const std::vector<Rat>& cost, int n, const std::vector<int>& match) {
  Rat sum = 0;
  for (int i = 0; i < n; ++i) sum += cost[i * n + match[i]];
  return sum;
}

}  // namespace

TropDeterminant tropical_determinant(const TropMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("tropical determinant of a non-square matrix");
  const int n = static_cast<int>(m.rows());
  TropDeterminant out;
  if (n == 0) {
    out.value = TropValue(0L);
    out.unique = true;
    return out;
  }

  // Replace +infinity by a penalty no finite permutation can reach.
  Rat max_abs = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m(i, j).finite()) max_abs = std::max(max_abs, Rat(abs(m(i, j).value())));
  const Rat finite_ceiling = n * max_abs;
  const Rat penalty = 2 * finite_ceiling + 1;
  std::vector<Rat> cost(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cost[i * n + j] = m(i, j).finite() ? m(i, j).value() : penalty;

  out.assignment = hungarian(cost, n);
  const Rat best = assignment_cost(cost, n, out.assignment);
  if (best > finite_ceiling) {
    out.value = TropValue::infinity();
    return out;
  }
  out.value = best;

  // Any other permutation avoids at least one optimal edge.
  out.unique = true;
  for (int i = 0; i < n && out.unique; ++i) {
    std::vector<Rat> forbidden = cost;
    forbidden[i * n + out.assignment[i]] = penalty;
    const auto alt = hungarian(forbidden, n);
    const Rat alt_cost = assignment_cost(forbidden, n, alt);
    if (alt_cost <= finite_ceiling && alt_cost == best) out.unique = false;
  }
  return out;
}

const char* factor_name(Factor f) {
  switch (f) {
    case Factor::Cx: return "Cx";
    case Factor::Cy: return "Cy";
    case Factor::Cz: return "Cz";
    case Factor::Dx: return "Dx";
    case Factor::Dy: return "Dy";
    case Factor::Dz: return "Dz";
  }
  return "?";
}

std::optional<Factor> parse_factor(std::string_view name) {
  for (Factor f : kAllFactors)
    if (name == factor_name(f)) return f;
  return std::nullopt;
}

bool TropP9::all_unique() const {
  return std::all_of(factors.begin(), factors.end(), [](const auto& f) { return f.unique; });
}

namespace {

using TropPoint = std::array<TropValue, 3>;

// Valuation of a small positive integer coefficient.
TropValue coefficient(long k, std::int64_t prime) {
  if (k == 0) return TropValue::infinity();
  long v = 0;
  if (prime > 1) {
    while (k % prime == 0) {
      k /= prime;
      ++v;
    }
  }
  return TropValue(v);
}

// coeff * x^a y^b z^c, tropicalized.
TropValue term(const TropPoint& p, long coeff, int a, int b, int c, std::int64_t prime) {
  TropValue out = coefficient(coeff, prime);
  const std::array<int, 3> e{a, b, c};
  for (int k = 0; k < 3; ++k) {
    if (e[k] == 0) continue;
    if (!p[k].finite()) return TropValue::infinity();
    out = otimes(out, TropValue(p[k].value() * e[k]));
  }
  return out;
}

std::array<TropValue, 6> quadratic_row(const TropPoint& p) {
  return {term(p, 1, 2, 0, 0, 0), term(p, 1, 1, 1, 0, 0), term(p, 1, 1, 0, 1, 0),
          term(p, 1, 0, 2, 0, 0), term(p, 1, 0, 1, 1, 0), term(p, 1, 0, 0, 2, 0)};
}

std::array<TropValue, 10> cubic_row(const TropPoint& p) {
  return {term(p, 1, 3, 0, 0, 0), term(p, 1, 2, 1, 0, 0), term(p, 1, 2, 0, 1, 0),
          term(p, 1, 1, 2, 0, 0), term(p, 1, 1, 1, 1, 0), term(p, 1, 1, 0, 2, 0),
          term(p, 1, 0, 3, 0, 0), term(p, 1, 0, 2, 1, 0), term(p, 1, 0, 1, 2, 0),
          term(p, 1, 0, 0, 3, 0)};
}

std::array<std::array<TropValue, 10>, 3> gradient_rows(const TropPoint& p, std::int64_t q) {
  const TropValue inf;
  return {{
      {term(p, 3, 2, 0, 0, q), term(p, 2, 1, 1, 0, q), term(p, 2, 1, 0, 1, q),
       term(p, 1, 0, 2, 0, q), term(p, 1, 0, 1, 1, q), term(p, 1, 0, 0, 2, q), inf, inf, inf, inf},
      {inf, term(p, 1, 2, 0, 0, q), inf, term(p, 2, 1, 1, 0, q), term(p, 1, 1, 0, 1, q), inf,
       term(p, 3, 0, 2, 0, q), term(p, 2, 0, 1, 1, q), term(p, 1, 0, 0, 2, q), inf},
      {inf, inf, term(p, 1, 2, 0, 0, q), inf, term(p, 1, 1, 1, 0, q), term(p, 2, 1, 0, 1, q), inf,
       term(p, 1, 0, 2, 0, q), term(p, 2, 0, 1, 1, q), term(p, 3, 0, 0, 2, q)},
  }};
}

TropPoint frame_point(int index) {
  // P1 = (1:0:0), P2 = (0:1:0), P3 = (0:0:1), P4 = (1:1:1).
  const TropValue zero(0L), inf;
  switch (index) {
    case 1: return {zero, inf, inf};
    case 2: return {inf, zero, inf};
    case 3: return {inf, inf, zero};
    default: return {zero, zero, zero};
  }
}

TropMatrix conic_matrix(const std::array<TropPoint, 6>& pts) {
  TropMatrix m(6, 6);
  for (std::size_t r = 0; r < 6; ++r) {
    const auto row = quadratic_row(pts[r]);
    for (std::size_t c = 0; c < 6; ++c) m(r, c) = row[c];
  }
  return m;
}

TropMatrix singular_matrix(const TropPoint& at, const std::array<TropPoint, 7>& rest,
                           std::int64_t prime) {
  TropMatrix m(10, 10);
  for (std::size_t r = 0; r < 7; ++r) {
    const auto row = cubic_row(rest[r]);
    for (std::size_t c = 0; c < 10; ++c) m(r, c) = row[c];
  }
  const auto grad = gradient_rows(at, prime);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 10; ++c) m(7 + r, c) = grad[r][c];
  return m;
}

}  // namespace

TropP9 tropical_p9(const TropConfig& t, std::int64_t coefficient_prime) {
  std::array<TropPoint, 8> pts{frame_point(1), frame_point(2), frame_point(3), frame_point(4),
                               t.points[0],    t.points[1],    t.points[2],    t.points[3]};
  for (std::size_t i = 4; i < 8; ++i) {
    if (!pts[i][0].finite() && !pts[i][1].finite() && !pts[i][2].finite()) {
      throw std::invalid_argument("tropical point needs a finite coordinate");
    }
  }
  const auto& r = pts;  // P4..P8 are r[3..7]
  TropP9 out;
  out.factors[0] = tropical_determinant(conic_matrix({r[0], r[3], r[4], r[5], r[6], r[7]}));
  out.factors[1] = tropical_determinant(conic_matrix({r[1], r[3], r[4], r[5], r[6], r[7]}));
  out.factors[2] = tropical_determinant(conic_matrix({r[2], r[3], r[4], r[5], r[6], r[7]}));
  out.factors[3] = tropical_determinant(
      singular_matrix(r[0], {r[1], r[2], r[3], r[4], r[5], r[6], r[7]}, coefficient_prime));
  out.factors[4] = tropical_determinant(
      singular_matrix(r[1], {r[2], r[0], r[3], r[4], r[5], r[6], r[7]}, coefficient_prime));
  out.factors[5] = tropical_determinant(
      singular_matrix(r[2], {r[0], r[1], r[3], r[4], r[5], r[6], r[7]}, coefficient_prime));
  for (std::size_t f = 0; f < 6; ++f) {
    if (!out.factors[f].value.finite()) {
      throw std::domain_error(std::string("tropical factor ") + factor_name(kAllFactors[f]) +
                              " is +infinity");
    }
  }
  const auto val = [&](std::size_t f) { return out.factors[f].value.value(); };
  out.u = val(3) + val(1) - val(0) - val(4);
  out.v = val(3) + val(2) - val(0) - val(5);
  return out;
}

std::optional<long> padic_valuation(const Rat& x, std::int64_t prime) {
  if (x == 0) return std::nullopt;
  const Int p = static_cast<long>(prime);
  auto count = [&](Int n) {
    long v = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++v;
    }
    return v;
  };
  return count(x.get_num()) - count(x.get_den());
}

std::optional<ValuationTrial> valuation_trial(const std::array<std::array<Rat, 3>, 4>& coords,
                                              std::int64_t prime, int trial) {
  TropConfig tc;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 3; ++k) {
      const auto v = padic_valuation(coords[i][k], prime);
      tc.points[i][k] = v ? TropValue(*v) : TropValue::infinity();
    }
  const Config8 c({ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(0, 0, 1), ProjPoint(1, 1, 1),
                   ProjPoint(coords[0][0], coords[0][1], coords[0][2]),
                   ProjPoint(coords[1][0], coords[1][1], coords[1][2]),
                   ProjPoint(coords[2][0], coords[2][1], coords[2][2]),
                   ProjPoint(coords[3][0], coords[3][1], coords[3][2])});
  const CBIngredients g = ingredients(c, {1, 2, 3});
  const std::array<Rat, 6> exact{g.cx, g.cy, g.cz, g.dx, g.dy, g.dz};
  for (const auto& x : exact)
    if (x == 0) return std::nullopt;

  TropP9 trop;
  try {
    trop = tropical_p9(tc, prime);
  } catch (const std::domain_error&) {
    return std::nullopt;
  }

  const Rat u = g.dx * g.cy / (g.cx * g.dy);
  const Rat v = g.dx * g.cz / (g.cx * g.dz);
  ValuationTrial out;
  out.trial = trial;
  out.exact = {*padic_valuation(u, prime), *padic_valuation(v, prime)};
  out.predicted = {trop.u, trop.v};
  out.all_unique = trop.all_unique();
  out.agrees = Rat(out.exact[0]) == trop.u && Rat(out.exact[1]) == trop.v;
  out.cancellation = false;
  out.factors_sound = true;
  for (std::size_t f = 0; f < 6; ++f) {
    const Rat val = *padic_valuation(exact[f], prime);
    const Rat& predicted = trop.factors[f].value.value();
    if (val > predicted) out.cancellation = true;
    if (val < predicted || (trop.factors[f].unique && val != predicted)) out.factors_sound = false;
  }
  return out;
}

ValuationReport valuation_agreement(std::int64_t prime, int trials, std::uint64_t seed,
                                    std::int64_t bound) {
  if (prime < 2) throw std::invalid_argument("prime must be at least 2");
  for (std::int64_t d = 2; d * d <= prime; ++d)
    if (prime % d == 0) throw std::invalid_argument("modulus is not prime");
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");

  ValuationReport report;
  report.prime = prime;
  report.seed = seed;
  report.bound = bound;
  report.trials = trials;
  Rng rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    std::optional<ValuationTrial> result;
    for (int attempt = 0; !result; ++attempt) {
      if (attempt >= 1000) throw std::runtime_error("too many degenerate valuation draws");
      std::array<std::array<Rat, 3>, 4> coords;
      for (auto& point : coords)
        for (auto& x : point) {
          const auto unit = rng.uniform(1, prime - 1) + prime * rng.uniform(0, 3);
          const auto e = rng.uniform(-bound, bound);
          const Rat signed_unit = rng.uniform(0, 1) ? unit : -unit;
          const Rat scale = pow(Rat(prime), static_cast<unsigned>(e < 0 ? -e : e));
          x = e >= 0 ? Rat(signed_unit * scale) : Rat(signed_unit / scale);
        }
      result = valuation_trial(coords, prime, trial);
      if (!result) ++report.rejected_draws;
    }
    const auto& r = *result;
    const auto& exact_of = [&](std::size_t k) { return Rat(r.exact[k]); };
    if (!r.factors_sound) ++report.factor_soundness_violations;
    if (r.agrees) ++report.agreements;
    if (!r.agrees && r.cancellation) ++report.cancellation_events;
    if (!r.agrees && !r.cancellation) ++report.unexplained_disagreements;
    if (r.all_unique) {
      ++report.unique_trials;
      if (!r.agrees) ++report.unique_disagreements;
    }
    if (exact_of(0) < r.predicted[0] || exact_of(1) < r.predicted[1]) {
      ++report.chart_lower_bound_violations;
    }
    report.details.push_back(r);
  }
  return report;
}

nlohmann::json to_json(const ValuationReport& r) {
  nlohmann::json trials = nlohmann::json::array();
  for (const auto& t : r.details) {
    trials.push_back({{"trial", t.trial},
                      {"val_u", t.exact[0]},
                      {"val_v", t.exact[1]},
                      {"trop_u", to_string(t.predicted[0])},
                      {"trop_v", to_string(t.predicted[1])},
                      {"all_unique", t.all_unique},
                      {"agrees", t.agrees},
                      {"cancellation", t.cancellation},
                      {"factors_sound", t.factors_sound}});
  }
  return {{"prime", r.prime},
          {"seed", r.seed},
          {"bound", r.bound},
          {"trials", r.trials},
          {"rejected_draws", r.rejected_draws},
          {"agreements", r.agreements},
          {"cancellation_events", r.cancellation_events},
          {"unexplained_disagreements", r.unexplained_disagreements},
          {"factor_soundness_violations", r.factor_soundness_violations},
          {"unique_trials", r.unique_trials},
          {"unique_disagreements", r.unique_disagreements},
          {"chart_lower_bound_violations", r.chart_lower_bound_violations},
          {"details", trials}};
}

}  // namespace cb
