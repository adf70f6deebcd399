#include "cb/pencil.hpp"

#include <vector>

namespace cb {

Rat Cubic::operator()(const ProjPoint& p) const {
  const auto m = cubic_monomials(p);
  Rat sum = 0;
  for (std::size_t i = 0; i < 10; ++i) sum += coeffs[i] * m[i];
  return sum;
}

RatMatrix cubic_monomial_matrix(std::span<const ProjPoint> points) {
  RatMatrix m(points.size(), 10);
  for (std::size_t r = 0; r < points.size(); ++r) {
    const auto row = cubic_monomials(points[r]);
    for (std::size_t c = 0; c < 10; ++c) m(r, c) = row[c];
  }
  return m;
}

std::pair<Cubic, Cubic> cubic_pencil_basis(const Config8& c) {
  const auto basis = right_nullspace(cubic_monomial_matrix(c.points()));
  if (basis.size() != 2) {
    throw DegenerateConfiguration(
        "cubics through the eight points form a space of dimension " + std::to_string(basis.size()),
        c.degeneracy());
  }
  auto to_cubic = [](const RatVector& v) {
    Cubic out;
    std::copy(v.begin(), v.end(), out.coeffs.begin());
    return out;
  };
  return {to_cubic(basis[0]), to_cubic(basis[1])};
}

std::optional<bool> cayley_identity_holds(const Config8& c, const ProjPoint& x) {
  try {
    const std::array<ProjPoint, 4> quad{c(1), c(2), c(3), c(4)};
    const std::array<ProjPoint, 4> q{c(5), c(6), c(7), c(8)};
    return cross_ratio_lines(x, q) == cross_ratio_conics(quad, q);
  } catch (const DegenerateCrossRatio&) {
    return std::nullopt;
  }
}

Certification certify_p9(const Config8& c, const ProjPoint& candidate) {
  const auto [c1, c2] = cubic_pencil_basis(c);
  Certification out;
  out.on_pencil = c1(candidate) == 0 && c2(candidate) == 0;

  std::vector<ProjPoint> nine(c.points().begin(), c.points().end());
  nine.push_back(candidate);
  out.rank_at_most_8 = rank(cubic_monomial_matrix(nine)) <= 8;

  out.cayley_identity = cayley_identity_holds(c, candidate);

  out.distinct_from_inputs = true;
  for (const auto& p : c.points()) {
    if (same_point(p, candidate)) out.distinct_from_inputs = false;
  }
  return out;
}

}  // namespace cb
