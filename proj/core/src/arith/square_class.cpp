#include "tf/arith/square_class.hpp"

#include "tf/arith/factor.hpp"
#include "tf/errors.hpp"

namespace tf::arith {

Integer squarefree_part(const Integer& n) {
  if (n == 0) throw PreconditionError("square class of zero");
  Integer out = sgn(n);
  for (const auto& [p, e] : factor(n)) {
    if (e % 2 == 1) out *= p;
  }
  return out;
}

SquareClass::SquareClass(const Rational& r) {
  if (r == 0) throw PreconditionError("square class of zero");
  // num/den has the class of num*den.
  value_ = squarefree_part(Integer(r.get_num() * r.get_den()));
}

SquareClass SquareClass::from_squarefree(Integer squarefree) {
  SquareClass c;
  c.value_ = std::move(squarefree);
  return c;
}

std::vector<Integer> SquareClass::primes() const {
  if (abs(value_) == 1) return {};
  return prime_divisors(value_);
}

SquareClass SquareClass::operator*(const SquareClass& other) const {
  Integer g;
  mpz_gcd(g.get_mpz_t(), value_.get_mpz_t(), other.value_.get_mpz_t());
  Integer a = value_ / g;
  Integer b = other.value_ / g;
  return from_squarefree(Integer(a * b));
}

SquareClass squarefree_class(const Rational& r) { return SquareClass(r); }

SquareClass power(const SquareClass& c, unsigned long k) {
  return k % 2 == 0 ? SquareClass() : c;
}

}  // namespace tf::arith
