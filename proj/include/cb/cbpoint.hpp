#pragma once

#include "cb/config.hpp"

#include <array>
#include <optional>

namespace cb {

/// The six scalars C_x, C_y, C_z, D_x, D_y, D_z for a chosen triple (i, j, k).
/// C_x = C(P_i, R), D_x = D(P_i; P_j, P_k, R), D_y = D(P_j; P_k, P_i, R),
/// D_z = D(P_k; P_i, P_j, R) where R lists the other five labels ascending.
struct CBIngredients {
  Rat cx, cy, cz, dx, dy, dz;
  Triple triple;
};

CBIngredients ingredients(const Config8& c, Triple triple);

/// First triple in lexicographic order with nonzero bracket.
/// Throws DegenerateConfiguration when every triple is collinear.
Triple default_triple(const Config8& c);

/// C_x D_y D_z P_i + D_x C_y D_z P_j + D_x D_y C_z P_k, not canonicalized.
std::array<Rat, 3> p9_determinantal_vector(const Config8& c, Triple triple);
/// Canonical form of the determinantal vector. Throws DegenerateConfiguration
/// on the zero vector.
ProjPoint p9_determinantal(const Config8& c, Triple triple);

/// The determinantal vector divided by [ijk]. Throws std::domain_error when
/// the triple is collinear and std::logic_error when integral inputs give a
/// non-integral quotient.
std::array<Rat, 3> p9_reduced_vector(const Config8& c, Triple triple);
ProjPoint p9_reduced(const Config8& c, Triple triple);

struct CrossRatioData {
  Rat l;  // (5,6,7,8) seen from the conics through P1..P4
  Rat m;  // (4,6,7,8) seen from the conics through P1, P2, P3, P5
  std::array<Rat, 3> basis_coeffs;  // P9 = a P6 + b P7 + c P8
};

/// A labelling-dependent precondition of the cross-ratio method failed.
class CrossRatioPrecondition : public std::domain_error {
 public:
  explicit CrossRatioPrecondition(const std::string& which)
      : std::domain_error("cross-ratio method precondition failed: " + which), which_(which) {}
  const std::string& which() const { return which_; }

 private:
  std::string which_;
};

/// Solves for P9 in the basis P6, P7, P8 under the given labelling.
/// Throws CrossRatioPrecondition when [678] or a conic denominator vanishes.
CrossRatioData cross_ratio_data(const Config8& c);

struct CrossRatioSolution {
  ProjPoint point;
  std::array<PointIndex, 8> order;  // relabelling that was used
  CrossRatioData data;
};

/// Tries relabellings in lexicographic order until the preconditions hold.
/// Throws DegenerateConfiguration on a zero solution or when no labelling works.
CrossRatioSolution solve_cross_ratio(const Config8& c);
ProjPoint p9_cross_ratio(const Config8& c);

}  // namespace cb
