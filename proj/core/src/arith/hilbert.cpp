#include "tf/arith/hilbert.hpp"

#include <set>

#include "tf/errors.hpp"

namespace tf::arith {

namespace {

// Splits a squarefree class at p into (valuation, unit part).
std::pair<int, Integer> split_at(const Integer& a, const Integer& p) {
  if (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t()) != 0) return {1, Integer(a / p)};
  return {0, a};
}

int legendre_bit(const Integer& u, const Integer& p) {
  return mpz_legendre(u.get_mpz_t(), p.get_mpz_t()) == 1 ? 0 : 1;
}

int mod8(const Integer& u) {
  return static_cast<int>(mpz_fdiv_ui(u.get_mpz_t(), 8));
}

int eps(int u8) { return ((u8 - 1) / 2) & 1; }
int omega(int u8) { return ((u8 * u8 - 1) / 8) & 1; }

}  // namespace

int hilbert_symbol(const SquareClass& a, const SquareClass& b, const Place& v) {
  if (v.is_infinite()) return (a.sign() < 0 && b.sign() < 0) ? 1 : 0;
  const Integer& p = v.p();
  auto [alpha, u] = split_at(a.value(), p);
  auto [beta, w] = split_at(b.value(), p);
  if (p == 2) {
    int u8 = mod8(u), w8 = mod8(w);
    return (eps(u8) * eps(w8) + alpha * omega(w8) + beta * omega(u8)) & 1;
  }
  int bit = 0;
  if (alpha == 1 && beta == 1) {
    // (-1)^{eps(p)} with eps(p) = (p-1)/2.
    bit ^= mpz_fdiv_ui(p.get_mpz_t(), 4) == 3 ? 1 : 0;
  }
  if (beta == 1) bit ^= legendre_bit(u, p);
  if (alpha == 1) bit ^= legendre_bit(w, p);
  return bit;
}

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
  return hilbert_symbol(squarefree_class(a), squarefree_class(b), v);
}

BrauerSupport hilbert_support(const SquareClass& a, const SquareClass& b) {
  std::vector<Place> out;
  for (const Place& v : bad_primes({a, b})) {
    if (hilbert_symbol(a, b, v) == 1) out.push_back(v);
  }
  if (hilbert_symbol(a, b, Place::infinity()) == 1) out.push_back(Place::infinity());
  return BrauerSupport(std::move(out));
}

BrauerSupport hilbert_support(const Rational& a, const Rational& b) {
  return hilbert_support(squarefree_class(a), squarefree_class(b));
}

bool is_local_square(const SquareClass& c, const Place& v) {
  if (v.is_infinite()) return c.sign() > 0;
  const Integer& p = v.p();
  auto [alpha, u] = split_at(c.value(), p);
  if (alpha == 1) return false;
  if (p == 2) return mod8(u) == 1;
  return legendre_bit(u, p) == 0;
}

std::vector<Place> bad_primes(const std::vector<SquareClass>& classes) {
  std::set<Integer> primes{Integer(2)};
  for (const SquareClass& c : classes) {
    for (Integer& p : c.primes()) primes.insert(std::move(p));
  }
  std::vector<Place> out;
  for (const Integer& p : primes) out.push_back(Place::prime(p));
  return out;
}

}  // namespace tf::arith
