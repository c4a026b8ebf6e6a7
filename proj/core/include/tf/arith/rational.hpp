#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tf::arith {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q" (whitespace not allowed). The result is
/// canonicalized. Throws PreconditionError on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

inline int sign(const Rational& r) { return sgn(r); }
inline int sign(const Integer& z) { return sgn(z); }

}  // namespace tf::arith
