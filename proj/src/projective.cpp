#include "cb/projective.hpp"

#include <sstream>

namespace cb {

ProjPoint::ProjPoint(Rat x, Rat y, Rat z) : c_{std::move(x), std::move(y), std::move(z)} {
  if (c_[0] == 0 && c_[1] == 0 && c_[2] == 0) {
    throw std::invalid_argument("projective point with all coordinates zero");
  }
}

ProjPoint ProjPoint::scaled(const Rat& factor) const {
  return ProjPoint(c_[0] * factor, c_[1] * factor, c_[2] * factor);
}

bool same_point(const ProjPoint& a, const ProjPoint& b) {
  return a.y() * b.z() == a.z() * b.y() && a.z() * b.x() == a.x() * b.z() &&
         a.x() * b.y() == a.y() * b.x();
}

std::string to_string(const ProjPoint& p) {
  std::ostringstream out;
  out << '(' << to_string(p.x()) << ':' << to_string(p.y()) << ':' << to_string(p.z()) << ')';
  return out.str();
}

ProjPoint canonical(const std::array<Rat, 3>& v) {
  if (v[0] == 0 && v[1] == 0 && v[2] == 0) {
    throw std::domain_error("cannot canonicalize the zero vector");
  }
  RatVector p = primitive_integer_vector(RatVector(v.begin(), v.end()));
  return ProjPoint(p[0], p[1], p[2]);
}

ProjPoint canonical(const ProjPoint& p) { return canonical(p.coords()); }

ProjTransform::ProjTransform(RatMatrix m) : m_(std::move(m)) {
  if (m_.rows() != 3 || m_.cols() != 3) throw ShapeError("projective transform must be 3x3");
  det_ = ff_determinant(m_);
}

ProjPoint apply_transform(const ProjTransform& t, const ProjPoint& p) {
  if (t.det() == 0) throw std::domain_error("singular projective transform");
  RatVector v = t.matrix() * RatVector(p.coords().begin(), p.coords().end());
  return ProjPoint(v[0], v[1], v[2]);
}

Rat bracket(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  return a.x() * (b.y() * c.z() - b.z() * c.y()) - a.y() * (b.x() * c.z() - b.z() * c.x()) +
         a.z() * (b.x() * c.y() - b.y() * c.x());
}

std::array<Rat, 6> quadratic_monomials(const ProjPoint& p) {
  const Rat &x = p.x(), &y = p.y(), &z = p.z();
  return {x * x, x * y, x * z, y * y, y * z, z * z};
}

std::array<Rat, 10> cubic_monomials(const ProjPoint& p) {
  const Rat &x = p.x(), &y = p.y(), &z = p.z();
  return {x * x * x, x * x * y, x * x * z, x * y * y, x * y * z,
          x * z * z, y * y * y, y * y * z, y * z * z, z * z * z};
}

std::array<std::array<Rat, 10>, 3> cubic_gradient(const ProjPoint& p) {
  const Rat &x = p.x(), &y = p.y(), &z = p.z();
  const Rat zero = 0;
  return {{
      {3 * x * x, 2 * x * y, 2 * x * z, y * y, y * z, z * z, zero, zero, zero, zero},
      {zero, x * x, zero, 2 * x * y, x * z, zero, 3 * y * y, 2 * y * z, z * z, zero},
      {zero, zero, x * x, zero, x * y, 2 * x * z, zero, y * y, 2 * y * z, 3 * z * z},
  }};
}

Rat conic_det(std::span<const ProjPoint, 6> p) {
  RatMatrix m(6, 6);
  for (std::size_t r = 0; r < 6; ++r) {
    auto row = quadratic_monomials(p[r]);
    for (std::size_t c = 0; c < 6; ++c) m(r, c) = row[c];
  }
  return ff_determinant(m);
}

Rat conic_bracket_expansion(std::span<const ProjPoint, 6> p) {
  auto b = [&](int i, int j, int k) { return bracket(p[i - 1], p[j - 1], p[k - 1]); };
  return b(1, 2, 3) * b(1, 4, 5) * b(2, 4, 6) * b(3, 5, 6) -
         b(1, 2, 4) * b(1, 3, 5) * b(2, 3, 6) * b(4, 5, 6);
}

Rat singular_cubic_det(const ProjPoint& p1, std::span<const ProjPoint, 7> rest) {
  RatMatrix m(10, 10);
  for (std::size_t r = 0; r < 7; ++r) {
    auto row = cubic_monomials(rest[r]);
    for (std::size_t c = 0; c < 10; ++c) m(r, c) = row[c];
  }
  auto grad = cubic_gradient(p1);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 10; ++c) m(7 + r, c) = grad[r][c];
  }
  return ff_determinant(m);
}

Rat singular_cubic_bracket_expansion(std::span<const ProjPoint, 8> points) {
  // Each term is a sign and nine brackets, written as three-digit labels.
  struct Term {
    int sign;
    std::array<int, 9> brackets;
  };
  static constexpr std::array<Term, 6> terms{{
      {+1, {647, 857, 478, 128, 173, 423, 573, 526, 176}},
      {-1, {647, 857, 473, 428, 178, 123, 573, 526, 176}},
      {+1, {647, 857, 473, 428, 178, 576, 126, 173, 523}},
      {+1, {657, 847, 573, 528, 178, 123, 473, 426, 176}},
      {-1, {657, 847, 578, 128, 173, 523, 473, 426, 176}},
      {-1, {657, 847, 573, 528, 178, 476, 126, 173, 423}},
  }};
  auto b = [&](int label) {
    return bracket(points[label / 100 - 1], points[label / 10 % 10 - 1], points[label % 10 - 1]);
  };
  Rat sum = 0;
  for (const auto& term : terms) {
    Rat product = term.sign;
    for (int label : term.brackets) {
      product *= b(label);
      if (product == 0) break;
    }
    sum += product;
  }
  return 3 * sum;
}

Rat cross_ratio_lines(const ProjPoint& base, std::span<const ProjPoint, 4> q) {
  Rat d14 = bracket(base, q[0], q[3]);
  if (d14 == 0) throw DegenerateCrossRatio("[base,q1,q4]");
  Rat d23 = bracket(base, q[1], q[2]);
  if (d23 == 0) throw DegenerateCrossRatio("[base,q2,q3]");
  return bracket(base, q[0], q[2]) * bracket(base, q[1], q[3]) / (d14 * d23);
}

Rat cross_ratio_conics(std::span<const ProjPoint, 4> quad, std::span<const ProjPoint, 4> q) {
  auto conic = [&](const ProjPoint& a, const ProjPoint& b) {
    const std::array<ProjPoint, 6> six{quad[0], quad[1], quad[2], quad[3], a, b};
    return conic_det(six);
  };
  Rat d14 = conic(q[0], q[3]);
  if (d14 == 0) throw DegenerateCrossRatio("C(quad,q1,q4)");
  Rat d23 = conic(q[1], q[2]);
  if (d23 == 0) throw DegenerateCrossRatio("C(quad,q2,q3)");
  return conic(q[0], q[2]) * conic(q[1], q[3]) / (d14 * d23);
}

}  // namespace cb
