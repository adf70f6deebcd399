#pragma once

#include "cb/tropical.hpp"

#include <array>
#include <map>
#include <vector>

namespace cb {

/// Exponents of x5, y5, z5, x6, ..., z8.
using ExponentVector = std::array<int, 12>;

/// Sparse polynomial with exact integer coefficients in the twelve
/// coordinates of P5..P8.
using SparsePoly = std::map<ExponentVector, Int>;

/// The chosen factor with P1..P4 fixed to the standard frame, fully expanded.
SparsePoly expand_factor(Factor which);

/// Evaluates a polynomial at the coordinates of P5..P8.
Rat evaluate(const SparsePoly& poly, const std::array<std::array<Rat, 3>, 4>& coords);

/// Exponent vectors with nonzero coefficient, sorted.
std::vector<ExponentVector> newton_support(Factor which);

/// Number of vertices of the convex hull, decided exactly: a point is a vertex
/// iff it is not a convex combination of the other points.
std::size_t newton_vertex_count(const std::vector<ExponentVector>& support);

}  // namespace cb
