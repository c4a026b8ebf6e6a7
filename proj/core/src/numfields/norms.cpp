#include "tf/numfields/norms.hpp"

#include "tf/arith/hilbert.hpp"
#include "tf/arith/real_roots.hpp"
#include "tf/errors.hpp"

namespace tf::nf {

bool is_norm_quadratic(const Integer& d, const Rational& a) {
  if (d == 0 || d == 1) throw PreconditionError("quadratic field needs d != 0, 1");
  if (a == 0) throw PreconditionError("norm test of zero");
  return arith::hilbert_support(SquareClass(a), SquareClass(Rational(d))).empty();
}

bool lambda_plus_quadratic(const Integer& d, const Rational& a) {
  if (d <= 1) throw PreconditionError("totally positive norms need a real quadratic field");
  return SquareClass(a).sign() > 0 && is_norm_quadratic(d, a);
}

Polynomial defining_polynomial(const NumberField& E) {
  if (!E.is_totally_real()) throw PreconditionError("defining polynomial requested for a CM field");
  return E.minpoly();
}

bool verify_lambda_plus_witness(const NumberField& E, const SquareClass& target, int m, const Polynomial& alpha) {
  const Polynomial f = defining_polynomial(E);
  if (alpha.degree() >= f.degree()) throw PreconditionError("witness degree must be below the field degree");
  if (alpha.is_zero()) return false;
  for (int s : arith::signs_at_real_roots(f, alpha)) {
    if (s < 0) return false;
  }
  SquareClass cls(arith::norm_via_resultant(f, alpha));
  if (m % 2 != 0) cls *= E.disc_class();
  return cls == target;
}

}  // namespace tf::nf
