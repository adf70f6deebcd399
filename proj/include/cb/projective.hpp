#pragma once

#include "cb/matrix.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace cb {

/// A point of the projective plane with exact homogeneous coordinates.
/// Equality is coordinate-wise; use same_point() for projective equality.
class ProjPoint {
 public:
  ProjPoint(Rat x, Rat y, Rat z);

  const Rat& x() const { return c_[0]; }
  const Rat& y() const { return c_[1]; }
  const Rat& z() const { return c_[2]; }
  const Rat& operator[](std::size_t i) const { return c_[i]; }
  const std::array<Rat, 3>& coords() const { return c_; }

  ProjPoint scaled(const Rat& factor) const;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

 private:
  std::array<Rat, 3> c_;
};

bool same_point(const ProjPoint& a, const ProjPoint& b);
std::string to_string(const ProjPoint& p);

/// Primitive integer coordinates with positive first nonzero entry.
ProjPoint canonical(const ProjPoint& p);
/// Throws std::domain_error for the zero vector.
ProjPoint canonical(const std::array<Rat, 3>& v);

class ProjTransform {
 public:
  explicit ProjTransform(RatMatrix m);
  const RatMatrix& matrix() const { return m_; }
  const Rat& det() const { return det_; }

 private:
  RatMatrix m_;
  Rat det_;
};

/// Throws std::domain_error when the transform is singular.
ProjPoint apply_transform(const ProjTransform& t, const ProjPoint& p);

Rat bracket(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

// Monomial layouts: (x^2, xy, xz, y^2, yz, z^2) and
// (x^3, x^2y, x^2z, xy^2, xyz, xz^2, y^3, y^2z, yz^2, z^3).
std::array<Rat, 6> quadratic_monomials(const ProjPoint& p);
std::array<Rat, 10> cubic_monomials(const ProjPoint& p);
/// d/dx, d/dy, d/dz of the cubic monomial vector, evaluated at p.
std::array<std::array<Rat, 10>, 3> cubic_gradient(const ProjPoint& p);

/// The 6x6 conic condition: zero iff the six points lie on a conic.
Rat conic_det(std::span<const ProjPoint, 6> p);
Rat conic_bracket_expansion(std::span<const ProjPoint, 6> p);

/// The 10x10 condition that the eight points lie on a cubic singular at p1.
Rat singular_cubic_det(const ProjPoint& p1, std::span<const ProjPoint, 7> rest);
/// The bracket expansion of D(P7; P1, ..., P6, P8), indices 1..8 of `points`.
Rat singular_cubic_bracket_expansion(std::span<const ProjPoint, 8> points);

class DegenerateCrossRatio : public std::domain_error {
 public:
  explicit DegenerateCrossRatio(std::string which)
      : std::domain_error("vanishing cross-ratio denominator " + which), which_(std::move(which)) {}
  const std::string& which() const { return which_; }

 private:
  std::string which_;
};

/// [b q1 q3][b q2 q4] / ([b q1 q4][b q2 q3]).
Rat cross_ratio_lines(const ProjPoint& base, std::span<const ProjPoint, 4> q);
/// C(quad,q1,q3) C(quad,q2,q4) / (C(quad,q1,q4) C(quad,q2,q3)).
Rat cross_ratio_conics(std::span<const ProjPoint, 4> quad, std::span<const ProjPoint, 4> q);

}  // namespace cb
