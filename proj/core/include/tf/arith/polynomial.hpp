#pragma once

#include <string>
#include <vector>

#include "tf/arith/rational.hpp"

namespace tf::arith {

/// Univariate polynomial over Q. Coefficients are stored low to high with no
/// trailing zeros; the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs) : Polynomial(std::vector<Rational>(coeffs)) {}
  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  static Polynomial x() { return Polynomial({0, 1}); }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  /// Leading coefficient (zero polynomial: 0).
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const { return sgn((*this)(x)); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& s) const;

  /// Euclidean division; throws PreconditionError on division by zero.
  void divmod(const Polynomial& d, Polynomial& q, Polynomial& r) const;
  Polynomial operator%(const Polynomial& d) const;
  Polynomial operator/(const Polynomial& d) const;

  Polynomial derivative() const;
  Polynomial monic() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd (zero when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// f / gcd(f, f'), made monic.
Polynomial squarefree_part(const Polynomial& f);

/// Resultant of two nonzero polynomials.
Rational resultant(const Polynomial& a, const Polynomial& b);

/// (-1)^{n(n-1)/2} Res(f, f') / lc(f) for f of degree n >= 1.
Rational discriminant(const Polynomial& f);

/// prod g(theta_i) over the roots of the monic f, i.e. the field norm of
/// g(theta) when f is irreducible. g is reduced modulo f first.
Rational norm_via_resultant(const Polynomial& f, const Polynomial& g);

}  // namespace tf::arith
