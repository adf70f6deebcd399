#include "cb/newton.hpp"

#include "cb/lp.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <random>
#include <set>

namespace cb {

namespace {

// A matrix entry: coefficient times a monomial, or zero.
struct Term {
  long coeff = 0;
  ExponentVector exps{};
};

using SymbolicRow = std::vector<Term>;

// Coordinates of a frame point (numeric) or a symbolic point (block 0..3).
struct SymbolicPoint {
  std::optional<std::array<long, 3>> numeric;
  int block = -1;
};

// coeff * x^a y^b z^c at point p.
Term monomial(const SymbolicPoint& p, long coeff, int a, int b, int c) {
  Term t;
  if (coeff == 0) return t;
  if (p.numeric) {
    long v = coeff;
    const auto& n = *p.numeric;
    for (int i = 0; i < a; ++i) v *= n[0];
    for (int i = 0; i < b; ++i) v *= n[1];
    for (int i = 0; i < c; ++i) v *= n[2];
    t.coeff = v;
    return t;
  }
  t.coeff = coeff;
  t.exps[3 * p.block] = a;
  t.exps[3 * p.block + 1] = b;
  t.exps[3 * p.block + 2] = c;
  return t;
}

SymbolicRow quadratic_row(const SymbolicPoint& p) {
  return {monomial(p, 1, 2, 0, 0), monomial(p, 1, 1, 1, 0), monomial(p, 1, 1, 0, 1),
          monomial(p, 1, 0, 2, 0), monomial(p, 1, 0, 1, 1), monomial(p, 1, 0, 0, 2)};
}

SymbolicRow cubic_row(const SymbolicPoint& p) {
  return {monomial(p, 1, 3, 0, 0), monomial(p, 1, 2, 1, 0), monomial(p, 1, 2, 0, 1),
          monomial(p, 1, 1, 2, 0), monomial(p, 1, 1, 1, 1), monomial(p, 1, 1, 0, 2),
          monomial(p, 1, 0, 3, 0), monomial(p, 1, 0, 2, 1), monomial(p, 1, 0, 1, 2),
          monomial(p, 1, 0, 0, 3)};
}

std::array<SymbolicRow, 3> gradient_rows(const SymbolicPoint& p) {
  const Term zero;
  return {{
      {monomial(p, 3, 2, 0, 0), monomial(p, 2, 1, 1, 0), monomial(p, 2, 1, 0, 1),
       monomial(p, 1, 0, 2, 0), monomial(p, 1, 0, 1, 1), monomial(p, 1, 0, 0, 2), zero, zero, zero,
       zero},
      {zero, monomial(p, 1, 2, 0, 0), zero, monomial(p, 2, 1, 1, 0), monomial(p, 1, 1, 0, 1), zero,
       monomial(p, 3, 0, 2, 0), monomial(p, 2, 0, 1, 1), monomial(p, 1, 0, 0, 2), zero},
      {zero, zero, monomial(p, 1, 2, 0, 0), zero, monomial(p, 1, 1, 1, 0),
       monomial(p, 2, 1, 0, 1), zero, monomial(p, 1, 0, 2, 0), monomial(p, 2, 0, 1, 1),
       monomial(p, 3, 0, 0, 2)},
  }};
}

// Determinant by dynamic programming over the set of used columns; the sign of
// placing column c after the columns in `mask` is (-1)^(#used columns > c).
SparsePoly symbolic_determinant(const std::vector<SymbolicRow>& rows) {
  const std::size_t n = rows.size();
  std::map<unsigned, SparsePoly> layer{{0u, SparsePoly{{ExponentVector{}, Int(1)}}}};
  for (std::size_t r = 0; r < n; ++r) {
    std::map<unsigned, SparsePoly> next;
    for (const auto& [mask, poly] : layer) {
      for (std::size_t c = 0; c < n; ++c) {
        if (mask & (1u << c)) continue;
        const Term& t = rows[r][c];
        if (t.coeff == 0) continue;
        const int above = std::popcount(mask >> (c + 1));
        const long coeff = above % 2 ? -t.coeff : t.coeff;
        SparsePoly& target = next[mask | (1u << c)];
        for (const auto& [exps, value] : poly) {
          ExponentVector e = exps;
          for (std::size_t k = 0; k < 12; ++k) e[k] += t.exps[k];
          Int& slot = target[e];
          slot += value * coeff;
          if (slot == 0) target.erase(e);
        }
      }
    }
    layer = std::move(next);
  }
  const auto it = layer.find((1u << n) - 1);
  return it == layer.end() ? SparsePoly{} : it->second;
}

std::array<SymbolicPoint, 8> frame_points() {
  std::array<SymbolicPoint, 8> p;
  p[0].numeric = std::array<long, 3>{1, 0, 0};
  p[1].numeric = std::array<long, 3>{0, 1, 0};
  p[2].numeric = std::array<long, 3>{0, 0, 1};
  p[3].numeric = std::array<long, 3>{1, 1, 1};
  for (int b = 0; b < 4; ++b) p[4 + b].block = b;
  return p;
}

}  // namespace

SparsePoly expand_factor(Factor which) {
  const auto p = frame_points();
  // Same argument order as the numeric ingredients for the triple (1, 2, 3).
  auto conic = [&](int first) {
    std::vector<SymbolicRow> rows{quadratic_row(p[first])};
    for (int i = 3; i < 8; ++i) rows.push_back(quadratic_row(p[i]));
    return symbolic_determinant(rows);
  };
  auto singular = [&](int at, int second, int third) {
    std::vector<SymbolicRow> rows{cubic_row(p[second]), cubic_row(p[third])};
    for (int i = 3; i < 8; ++i) rows.push_back(cubic_row(p[i]));
    for (auto& g : gradient_rows(p[at])) rows.push_back(g);
    return symbolic_determinant(rows);
  };
  switch (which) {
    case Factor::Cx: return conic(0);
    case Factor::Cy: return conic(1);
    case Factor::Cz: return conic(2);
    case Factor::Dx: return singular(0, 1, 2);
    case Factor::Dy: return singular(1, 2, 0);
    case Factor::Dz: return singular(2, 0, 1);
  }
  return {};
}

Rat evaluate(const SparsePoly& poly, const std::array<std::array<Rat, 3>, 4>& coords) {
  Rat sum = 0;
  for (const auto& [exps, coeff] : poly) {
    Rat term = coeff;
    for (std::size_t k = 0; k < 12; ++k) term *= pow(coords[k / 3][k % 3], exps[k]);
    sum += term;
  }
  return sum;
}

std::vector<ExponentVector> newton_support(Factor which) {
  std::vector<ExponentVector> out;
  for (const auto& [exps, coeff] : expand_factor(which)) out.push_back(exps);
  return out;
}

namespace {

bool in_hull(const ExponentVector& p, const std::vector<const ExponentVector*>& others) {
  if (others.empty()) return false;
  RatMatrix a(13, others.size());
  RatVector b(13);
  for (std::size_t j = 0; j < others.size(); ++j) {
    for (std::size_t k = 0; k < 12; ++k) a(k, j) = (*others[j])[k];
    a(12, j) = 1;
  }
  for (std::size_t k = 0; k < 12; ++k) b[k] = p[k];
  b[12] = 1;
  return nonnegative_feasible(a, b);
}

}  // namespace

std::size_t newton_vertex_count(const std::vector<ExponentVector>& support) {
  std::vector<ExponentVector> pts = support;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 1) return pts.size();

  // Unique maximizers of linear functionals are vertices.
  std::set<std::size_t> vertices;
  std::mt19937_64 gen(0x5eed);
  std::uniform_int_distribution<int> coeff(-1000, 1000);
  for (int round = 0; round < 4000; ++round) {
    std::array<long, 12> w{};
    for (auto& x : w) x = coeff(gen);
    long best = 0;
    std::size_t arg = 0, count = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      long dot = 0;
      for (std::size_t k = 0; k < 12; ++k) dot += w[k] * pts[i][k];
      if (count == 0 || dot > best) {
        best = dot;
        arg = i;
        count = 1;
      } else if (dot == best) {
        ++count;
      }
    }
    if (count == 1) vertices.insert(arg);
  }

  std::vector<const ExponentVector*> known;
  for (auto i : vertices) known.push_back(&pts[i]);
  std::size_t count = vertices.size();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (vertices.count(i)) continue;
    if (in_hull(pts[i], known)) continue;
    std::vector<const ExponentVector*> others;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) others.push_back(&pts[j]);
    if (!in_hull(pts[i], others)) ++count;
  }
  return count;
}

}  // namespace cb
