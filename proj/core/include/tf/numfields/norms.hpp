#pragma once

#include "tf/numfields/field.hpp"

namespace tf::nf {

/// Whether a is a norm from Q(sqrt d), d squarefree and not 0 or 1.
/// By the Hasse norm theorem this is the vanishing of (a, d) everywhere.
bool is_norm_quadratic(const Integer& d, const Rational& a);

/// Whether the class of a lies in the image of norms of totally positive
/// elements of the real quadratic field Q(sqrt d).
bool lambda_plus_quadratic(const Integer& d, const Rational& a);

/// Checks that alpha (a polynomial in the generator) is totally positive and
/// that N(alpha) * disc^m has class `target`. Throws PreconditionError when
/// alpha vanishes at a root of the defining polynomial.
bool verify_lambda_plus_witness(const NumberField& E, const SquareClass& target, int m, const Polynomial& alpha);

/// Defining polynomial of a totally real field (x^2 - d for Q(sqrt d)).
Polynomial defining_polynomial(const NumberField& E);

}  // namespace tf::nf
