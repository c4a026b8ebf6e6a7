#pragma once

#include <vector>

#include "tf/arith/place.hpp"
#include "tf/arith/square_class.hpp"

namespace tf::arith {

/// Additive Hilbert symbol: 0 when z^2 = a x^2 + b y^2 has a nontrivial
/// solution over Q_v, 1 otherwise.
int hilbert_symbol(const SquareClass& a, const SquareClass& b, const Place& v);
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

/// The places where (a, b) is nontrivial.
BrauerSupport hilbert_support(const SquareClass& a, const SquareClass& b);
BrauerSupport hilbert_support(const Rational& a, const Rational& b);

/// True when the class c is a square in Q_v.
bool is_local_square(const SquareClass& c, const Place& v);

/// The places {2} together with every prime dividing one of the classes,
/// ascending (no infinity).
std::vector<Place> bad_primes(const std::vector<SquareClass>& classes);

}  // namespace tf::arith
