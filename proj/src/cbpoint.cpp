#include "cb/cbpoint.hpp"

#include <algorithm>
#include <numeric>

namespace cb {

namespace {

void check_triple(Triple t) {
  auto ok = [](PointIndex i) { return i >= 1 && i <= 8; };
  if (!ok(t.i) || !ok(t.j) || !ok(t.k) || t.i == t.j || t.j == t.k || t.i == t.k) {
    throw std::invalid_argument("triple must be three distinct labels in 1..8");
  }
}

std::array<PointIndex, 5> complement(Triple t) {
  std::array<PointIndex, 5> rest{};
  std::size_t n = 0;
  for (PointIndex i = 1; i <= 8; ++i)
    if (i != t.i && i != t.j && i != t.k) rest[n++] = i;
  return rest;
}

Rat conic_of(const Config8& c, PointIndex first, const std::array<PointIndex, 5>& rest) {
  const std::array<ProjPoint, 6> six{c(first), c(rest[0]), c(rest[1]), c(rest[2]), c(rest[3]),
                                     c(rest[4])};
  return conic_det(six);
}

Rat singular_of(const Config8& c, PointIndex at, PointIndex second, PointIndex third,
                const std::array<PointIndex, 5>& rest) {
  const std::array<ProjPoint, 7> seven{c(second),  c(third),   c(rest[0]), c(rest[1]),
                                       c(rest[2]), c(rest[3]), c(rest[4])};
  return singular_cubic_det(c(at), seven);
}

}  // namespace

CBIngredients ingredients(const Config8& c, Triple t) {
  check_triple(t);
  const auto rest = complement(t);
  CBIngredients out{conic_of(c, t.i, rest),
                    conic_of(c, t.j, rest),
                    conic_of(c, t.k, rest),
                    singular_of(c, t.i, t.j, t.k, rest),
                    singular_of(c, t.j, t.k, t.i, rest),
                    singular_of(c, t.k, t.i, t.j, rest),
                    t};
  return out;
}

Triple default_triple(const Config8& c) {
  for (PointIndex i = 1; i <= 8; ++i)
    for (PointIndex j = i + 1; j <= 8; ++j)
      for (PointIndex k = j + 1; k <= 8; ++k)
        if (bracket(c(i), c(j), c(k)) != 0) return {i, j, k};
  throw DegenerateConfiguration("all eight points are collinear", c.degeneracy());
}

std::array<Rat, 3> p9_determinantal_vector(const Config8& c, Triple t) {
  const CBIngredients g = ingredients(c, t);
  const Rat wi = g.cx * g.dy * g.dz;
  const Rat wj = g.dx * g.cy * g.dz;
  const Rat wk = g.dx * g.dy * g.cz;
  std::array<Rat, 3> v;
  for (std::size_t a = 0; a < 3; ++a) v[a] = wi * c(t.i)[a] + wj * c(t.j)[a] + wk * c(t.k)[a];
  return v;
}

namespace {

bool is_zero(const std::array<Rat, 3>& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

}  // namespace

ProjPoint p9_determinantal(const Config8& c, Triple t) {
  auto v = p9_determinantal_vector(c, t);
  if (is_zero(v)) {
    throw DegenerateConfiguration("determinantal formula gave the zero vector", c.degeneracy());
  }
  return canonical(v);
}

std::array<Rat, 3> p9_reduced_vector(const Config8& c, Triple t) {
  check_triple(t);
  const Rat b = bracket(c(t.i), c(t.j), c(t.k));
  if (b == 0) throw std::domain_error("reduced formula needs a noncollinear triple");
  auto v = p9_determinantal_vector(c, t);
  const bool integral = std::all_of(c.points().begin(), c.points().end(), [](const ProjPoint& p) {
    return is_integer(p.x()) && is_integer(p.y()) && is_integer(p.z());
  });
  for (auto& x : v) {
    x /= b;
    if (integral && !is_integer(x)) {
      throw std::logic_error("determinantal coordinate not divisible by the triple bracket");
    }
  }
  return v;
}

ProjPoint p9_reduced(const Config8& c, Triple t) {
  auto v = p9_reduced_vector(c, t);
  if (is_zero(v)) {
    throw DegenerateConfiguration("reduced formula gave the zero vector", c.degeneracy());
  }
  return canonical(v);
}

CrossRatioData cross_ratio_data(const Config8& c) {
  auto b = [&](int i, int j, int k) { return bracket(c(i), c(j), c(k)); };
  if (b(6, 7, 8) == 0) throw CrossRatioPrecondition("[678] = 0");

  Rat l, m;
  try {
    const std::array<ProjPoint, 4> quad{c(1), c(2), c(3), c(4)};
    const std::array<ProjPoint, 4> q{c(5), c(6), c(7), c(8)};
    l = cross_ratio_conics(quad, q);
  } catch (const DegenerateCrossRatio& e) {
    throw CrossRatioPrecondition("l: " + e.which());
  }
  try {
    const std::array<ProjPoint, 4> quad{c(1), c(2), c(3), c(5)};
    const std::array<ProjPoint, 4> q{c(4), c(6), c(7), c(8)};
    m = cross_ratio_conics(quad, q);
  } catch (const DegenerateCrossRatio& e) {
    throw CrossRatioPrecondition("m: " + e.which());
  }

  const Rat b647 = b(6, 4, 7), b657 = b(6, 5, 7), b847 = b(8, 4, 7), b857 = b(8, 5, 7);
  const Rat b648 = b(6, 4, 8), b658 = b(6, 5, 8);

  // Fourth intersection of
  //   [657] ab + l [658] ac + (1 - l) [857] bc = 0,
  //   [647] ab + m [648] ac + (1 - m) [847] bc = 0
  // besides the three coordinate points.
  const Rat lines = b658 * b847 * l * (m - 1) - b648 * b857 * (l - 1) * m;
  const Rat conics = b647 * b658 * l - b648 * b657 * m;
  const Rat mixed = b647 * b857 * (l - 1) - b657 * b847 * (m - 1);
  return CrossRatioData{l, m, {-mixed * lines, -conics * lines, -conics * mixed}};
}

CrossRatioSolution solve_cross_ratio(const Config8& c) {
  std::array<PointIndex, 8> order;
  std::iota(order.begin(), order.end(), 1);
  do {
    const Config8 labelled = c.relabeled(order);
    CrossRatioData data;
    try {
      data = cross_ratio_data(labelled);
    } catch (const CrossRatioPrecondition&) {
      continue;
    }
    const auto& [a, b, cc] = data.basis_coeffs;
    if (a == 0 && b == 0 && cc == 0) {
      throw DegenerateConfiguration("cross-ratio method gave the zero solution", c.degeneracy());
    }
    std::array<Rat, 3> v;
    for (std::size_t k = 0; k < 3; ++k) {
      v[k] = a * labelled(6)[k] + b * labelled(7)[k] + cc * labelled(8)[k];
    }
    return CrossRatioSolution{canonical(v), order, data};
  } while (std::next_permutation(order.begin(), order.end()));
  throw DegenerateConfiguration("no labelling satisfies the cross-ratio preconditions",
                                c.degeneracy());
}

ProjPoint p9_cross_ratio(const Config8& c) { return solve_cross_ratio(c).point; }

}  // namespace cb
