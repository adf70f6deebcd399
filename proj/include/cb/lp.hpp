#pragma once

#include "cb/matrix.hpp"

namespace cb {

/// Decides whether A x = b has a solution with x >= 0, exactly.
/// Phase-one simplex over the rationals with Bland's anti-cycling rule.
bool nonnegative_feasible(const RatMatrix& a, const RatVector& b);

}  // namespace cb
