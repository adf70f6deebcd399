#pragma once

#include "cb/config.hpp"

#include <array>
#include <optional>
#include <utility>

namespace cb {

/// A ternary cubic as coefficients of x^3, x^2y, x^2z, xy^2, xyz, xz^2, y^3, y^2z, yz^2, z^3.
struct Cubic {
  std::array<Rat, 10> coeffs;
  Rat operator()(const ProjPoint& p) const;
};

/// Rows are the cubic monomial vectors of the given points.
RatMatrix cubic_monomial_matrix(std::span<const ProjPoint> points);

/// Two primitive cubics spanning the cubics through all eight points.
/// Throws DegenerateConfiguration when the nullity exceeds two.
std::pair<Cubic, Cubic> cubic_pencil_basis(const Config8& c);

struct Certification {
  bool on_pencil = false;             // both basis cubics vanish at the candidate
  bool rank_at_most_8 = false;        // the nine monomial rows are dependent
  std::optional<bool> cayley_identity;  // unset when a cross ratio is undefined
  bool distinct_from_inputs = false;

  bool certified() const {
    return on_pencil && rank_at_most_8 && cayley_identity.value_or(true) && distinct_from_inputs;
  }
};

/// Checks a candidate ninth point against the cubic pencil, the 9x10 rank
/// condition and Cayley's cross-ratio identity (5,6,7,8)_9 = (5,6,7,8)_{1234}.
Certification certify_p9(const Config8& c, const ProjPoint& candidate);

/// (5,6,7,8)_X == (5,6,7,8)_{1234}; unset when either side is undefined.
std::optional<bool> cayley_identity_holds(const Config8& c, const ProjPoint& x);

}  // namespace cb
