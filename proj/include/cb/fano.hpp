#pragma once

#include "cb/config.hpp"

#include <array>
#include <cstdint>

namespace cb {

/// Argument list (s1, ..., s7; s8) of the Fano bracket monomial.
struct FanoTuple {
  std::array<PointIndex, 7> seven;
  PointIndex eighth;
};

/// Product of 21 brackets: the cyclic row [s_i s_{i+1} s8] and the two
/// cyclically invariant Fano planes [s_i s_{i+1} s_{i+3}], [s_i s_{i+1} s_{i+5}]
/// (indices mod 7). Throws std::invalid_argument if t is not a permutation.
Rat fano_monomial(const Config8& c, const FanoTuple& t);

enum class FanoMode { full, reduced };

struct FanoSum {
  std::array<Rat, 3> vector;  // raw, not canonicalized; zero signals degeneracy
  std::uint64_t evaluations = 0;  // number of monomials evaluated
};

/// Signed sum over S8 of sign(pi) F(pi(1..7); pi(8)) P_pi(8).
/// Reduced mode visits one representative per orbit of the order-14 dihedral
/// action on the first seven slots (F is invariant under rotation, and
/// reversal flips both F and the sign), weighting each by 14.
FanoSum p9_fano(const Config8& c, FanoMode mode);

}  // namespace cb
