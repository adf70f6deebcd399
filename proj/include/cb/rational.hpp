#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>

namespace cb {

using Int = mpz_class;
using Rat = mpq_class;  // gmpxx keeps mpq_class canonical after every operation

/// Parses "n", "-n" or "p/q" into an exact rational. Throws std::invalid_argument.
Rat parse_rational(std::string_view text);

std::string to_string(const Rat& value);
std::string to_string(const Int& value);

bool is_integer(const Rat& value);

/// Least common multiple of the denominators (1 for an empty span).
Int denominator_lcm(std::span<const Rat> values);

/// gcd of the numerators of an integral vector (0 if all zero).
Int integer_content(std::span<const Rat> values);

Rat pow(const Rat& base, unsigned exponent);

}  // namespace cb
