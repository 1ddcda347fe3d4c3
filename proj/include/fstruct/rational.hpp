#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fstruct {

/// Exact rational scalar. gmp keeps it in lowest terms with a positive
/// denominator.
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Parses "p" or "p/q" (optional leading sign, decimal digits only).
/// Throws std::invalid_argument on anything else, including q == 0.
Rational parse_rational(std::string_view text);

/// Prints as "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

}  // namespace fstruct
