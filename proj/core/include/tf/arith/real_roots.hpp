#pragma once

#include <vector>

#include "tf/arith/polynomial.hpp"

namespace tf::arith {

/// Open interval (lo, hi) with rational endpoints that are not roots.
struct RootInterval {
  Rational lo;
  Rational hi;
};

/// Sturm sequence of f.
std::vector<Polynomial> sturm_sequence(const Polynomial& f);

/// Number of distinct real roots of f in (lo, hi]; lo must not be a root.
int count_roots(const std::vector<Polynomial>& sturm, const Rational& lo, const Rational& hi);

/// Number of distinct real roots.
int count_real_roots(const Polynomial& f);

/// One isolating interval per distinct real root, ascending and pairwise
/// disjoint. The squarefree part of f is used.
std::vector<RootInterval> isolate_real_roots(const Polynomial& f);

/// Sign (+1/-1) of g at each real root of f in ascending root order.
/// Throws PreconditionError if f and g share a root.
std::vector<int> signs_at_real_roots(const Polynomial& f, const Polynomial& g);

}  // namespace tf::arith
