#include "tf/arith/polynomial.hpp"

#include <algorithm>

#include "tf/errors.hpp"

namespace tf::arith {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (Rational& r : c_) r.canonicalize();
  trim();
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::coeff(int i) const {
  return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> out(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(int(i)) + o.coeff(int(i));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (Rational& r : out.c_) r = -r;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Rational& s) const {
  std::vector<Rational> out = c_;
  for (Rational& r : out) r *= s;
  return Polynomial(std::move(out));
}

void Polynomial::divmod(const Polynomial& d, Polynomial& q, Polynomial& r) const {
  if (d.is_zero()) throw PreconditionError("polynomial division by zero");
  std::vector<Rational> rem = c_;
  int dd = d.degree();
  std::vector<Rational> quot(std::max(0, degree() - dd + 1), Rational(0));
  Rational lead = d.leading();
  for (int k = degree() - dd; k >= 0; --k) {
    Rational t = rem[k + dd] / lead;
    quot[k] = t;
    if (t == 0) continue;
    for (int i = 0; i <= dd; ++i) rem[k + i] -= t * d.c_[i];
  }
  q = Polynomial(std::move(quot));
  rem.resize(std::min<std::size_t>(rem.size(), std::max(dd, 0)));
  r = Polynomial(std::move(rem));
}

Polynomial Polynomial::operator%(const Polynomial& d) const {
  Polynomial q, r;
  divmod(d, q, r);
  return r;
}

Polynomial Polynomial::operator/(const Polynomial& d) const {
  Polynomial q, r;
  divmod(d, q, r);
  return q;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return *this * Rational(1 / leading());
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& a = c_[i];
    if (a == 0) continue;
    std::string term = arith::to_string(abs(a));
    if (!out.empty()) out += sgn(a) < 0 ? " - " : " + ";
    else if (sgn(a) < 0) out += "-";
    if (i > 0 && abs(a) == 1) term.clear();
    if (i >= 1) term += (term.empty() ? "" : "*") + std::string("x");
    if (i >= 2) term += "^" + std::to_string(i);
    out += term;
  }
  return out;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("squarefree part of the zero polynomial");
  if (f.degree() == 0) return Polynomial::constant(1);
  return (f / gcd(f, f.derivative())).monic();
}

Rational resultant(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) throw PreconditionError("resultant with the zero polynomial");
  Polynomial x = a, y = b;
  Rational acc = 1;
  // Res(A, B) = (-1)^{deg A deg B} lc(B)^{deg A - deg R} Res(B, R), R = A mod B.
  while (true) {
    int da = x.degree(), db = y.degree();
    if (db == 0) {
      Rational p = 1;
      for (int i = 0; i < da; ++i) p *= y.leading();
      return acc * p;
    }
    if (da == 0) {
      Rational p = 1;
      for (int i = 0; i < db; ++i) p *= x.leading();
      return acc * p;
    }
    Polynomial r = x % y;
    if (r.is_zero()) return 0;
    int dr = r.degree();
    if ((da * db) % 2 == 1) acc = -acc;
    Rational lc = y.leading();
    for (int i = 0; i < da - dr; ++i) acc *= lc;
    x = std::move(y);
    y = std::move(r);
  }
}

Rational discriminant(const Polynomial& f) {
  int n = f.degree();
  if (n < 1) throw PreconditionError("discriminant needs degree >= 1");
  if (n == 1) return 1;
  Rational res = resultant(f, f.derivative()) / f.leading();
  if ((n * (n - 1) / 2) % 2 == 1) res = -res;
  return res;
}

Rational norm_via_resultant(const Polynomial& f, const Polynomial& g) {
  if (!f.is_monic()) throw PreconditionError("norm needs a monic defining polynomial");
  if (f.degree() < 1) throw PreconditionError("defining polynomial must have degree >= 1");
  Polynomial h = g % f;
  if (h.is_zero()) return 0;
  return resultant(f, h);
}

}  // namespace tf::arith
