#pragma once

// Brute-force reference computations used to check the library. They share
// no code with it beyond GMP integer arithmetic.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

inline bool is_prime_small(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline bool is_squarefree_small(long n) {
  if (n == 0) return false;
  long a = n < 0 ? -n : n;
  for (long d = 2; d * d <= a; ++d) {
    if (a % (d * d) == 0) return false;
  }
  return true;
}

/// Squarefree part by trial division.
inline long squarefree_small(long n) {
  long sign = n < 0 ? -1 : 1;
  long a = n * sign, out = 1;
  for (long d = 2; d * d <= a; ++d) {
    int e = 0;
    while (a % d == 0) {
      a /= d;
      ++e;
    }
    if (e % 2 == 1) out *= d;
  }
  return sign * out * a;
}

/// Whether the exact integer t is a square (or zero) in Q_p, using Euler's
/// criterion for odd p and t = 1 mod 8 for units at 2.
inline bool padic_square_or_zero(mpz_class t, long p) {
  if (t == 0) return true;
  int e = 0;
  while (mpz_divisible_ui_p(t.get_mpz_t(), p) != 0) {
    t /= p;
    ++e;
  }
  if (e % 2 == 1) return false;
  if (p == 2) return mpz_fdiv_ui(t.get_mpz_t(), 8) == 1;
  mpz_class r, base = t % p, ex = (p - 1) / 2, mod = p;
  if (base < 0) base += p;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), ex.get_mpz_t(), mod.get_mpz_t());
  return r == 1;
}

/// Hilbert symbol (a, b)_p for squarefree integers by searching for a
/// primitive (x, y) with a x^2 + b y^2 a p-adic square: one of x, y is a
/// unit, so it is scaled to 1 and the other runs over residues mod p^k.
inline int hilbert_brute(long a, long b, long p) {
  long k = p == 2 ? 7 : 4;
  long modulus = 1;
  for (long i = 0; i < k; ++i) modulus *= p;
  for (long t = 0; t < modulus; ++t) {
    mpz_class tt = t;
    if (padic_square_or_zero(mpz_class(a + b * tt * tt), p)) return 0;
    if (padic_square_or_zero(mpz_class(a * tt * tt + b), p)) return 0;
  }
  return 1;
}

inline int hilbert_brute_inf(long a, long b) { return (a < 0 && b < 0) ? 1 : 0; }

/// n is a sum of two integer squares.
inline bool sum_of_two_squares(long n) {
  for (long x = 0; x * x <= n; ++x) {
    long r = n - x * x;
    long y = static_cast<long>(std::sqrt(static_cast<double>(r)));
    while (y * y > r) --y;
    while ((y + 1) * (y + 1) <= r) ++y;
    if (y * y == r) return true;
  }
  return false;
}

/// Search for a nonzero integer vector of max-norm <= bound with
/// sum a_i x_i^2 = 0. Signs do not matter, so the first n - 1 coordinates
/// run over 0..bound and the last one is solved for.
inline std::optional<std::vector<long>> isotropic_search(const std::vector<long>& a, long bound) {
  const std::size_t n = a.size();
  if (n < 2) return std::nullopt;
  std::vector<long> x(n, 0);
  while (true) {
    mpz_class s = 0;
    bool nonzero = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      s += mpz_class(a[i]) * x[i] * x[i];
      nonzero = nonzero || x[i] != 0;
    }
    mpz_class t = -s;
    if (nonzero && mpz_divisible_p(t.get_mpz_t(), mpz_class(a[n - 1]).get_mpz_t())) {
      t /= a[n - 1];
      if (t >= 0 && mpz_perfect_square_p(t.get_mpz_t())) {
        mpz_class r = sqrt(t);
        if (r <= bound) {
          x[n - 1] = r.get_si();
          return x;
        }
      }
    }
    std::size_t i = 0;
    while (i + 1 < n && x[i] == bound) {
      x[i] = 0;
      ++i;
    }
    if (i + 1 == n) return std::nullopt;
    ++x[i];
  }
}

/// Determinant of a small integer matrix by fraction-free elimination.
inline mpq_class determinant(std::vector<std::vector<mpq_class>> m) {
  const std::size_t n = m.size();
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      mpq_class f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

/// (positive, negative) inertia of a symmetric rational matrix, by
/// symmetric Gaussian elimination (a sequence of congruences).
inline std::pair<int, int> signature(std::vector<std::vector<mpq_class>> m) {
  const std::size_t n = m.size();
  int pos = 0, neg = 0;
  auto add = [&](std::size_t dst, std::size_t src, const mpq_class& f) {
    for (std::size_t k = 0; k < n; ++k) m[dst][k] += f * m[src][k];
    for (std::size_t k = 0; k < n; ++k) m[k][dst] += f * m[k][src];
  };
  for (std::size_t c = 0; c < n; ++c) {
    if (m[c][c] == 0) {
      std::size_t j = c + 1;
      while (j < n && m[j][c] == 0) ++j;
      if (j == n) continue;
      add(c, j, (m[j][j] + 2 * m[c][j] != 0) ? 1 : -1);
    }
    mpq_class piv = m[c][c];
    if (piv > 0) ++pos;
    if (piv < 0) ++neg;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] != 0) add(r, c, -m[r][c] / piv);
    }
  }
  return {pos, neg};
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline long uniform(std::mt19937_64& g, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(g);
}

/// Random nonzero integer in [-bound, bound].
inline long nonzero(std::mt19937_64& g, long bound) {
  long v = 0;
  while (v == 0) v = uniform(g, -bound, bound);
  return v;
}

}  // namespace oracle

namespace oracle {

/// Springer's theorem at an odd prime: a diagonal form with squarefree
/// integer entries is anisotropic over Q_p iff its unit part and its p-part
/// (divided by p) are both anisotropic mod p. Anisotropy mod p is checked by
/// enumerating F_p^k.
inline bool anisotropic_mod_p(const std::vector<long>& a, long p) {
  const std::size_t n = a.size();
  if (n == 0) return true;
  std::vector<long> x(n, 0);
  while (true) {
    std::size_t i = 0;
    while (i < n && x[i] == p - 1) {
      x[i] = 0;
      ++i;
    }
    if (i == n) return true;
    ++x[i];
    long s = 0;
    for (std::size_t j = 0; j < n; ++j) s = (s + (a[j] % p + p) % p * (x[j] * x[j] % p)) % p;
    if (s == 0) return false;
  }
}

inline bool anisotropic_odd_p(const std::vector<long>& a, long p) {
  std::vector<long> units, pparts;
  for (long v : a) {
    if (v % p == 0) {
      pparts.push_back(v / p);
    } else {
      units.push_back(v);
    }
  }
  return anisotropic_mod_p(units, p) && anisotropic_mod_p(pparts, p);
}

/// 2-adic check: lifts primitive zeros mod 2^j (first odd coordinate scaled
/// to 1) level by level. Returns true when no zero survives to 2^depth,
/// which certifies anisotropy over Q_2.
inline bool anisotropic_2(const std::vector<long>& a, int depth = 7) {
  const std::size_t n = a.size();
  using Vec = std::vector<long>;
  std::vector<Vec> level;
  for (long mask = 1; mask < (1L << n); ++mask) {
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = (mask >> i) & 1;
    long s = 0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * x[i];
    if (s % 2 == 0) level.push_back(x);
  }
  long mod = 2;
  for (int j = 1; j < depth && !level.empty(); ++j) {
    long next_mod = mod * 2;
    std::vector<Vec> next;
    for (const Vec& x : level) {
      std::size_t lead = 0;
      while (x[lead] % 2 == 0) ++lead;
      for (long mask = 0; mask < (1L << n); ++mask) {
        if ((mask >> lead) & 1) continue;
        Vec y = x;
        for (std::size_t i = 0; i < n; ++i) y[i] += ((mask >> i) & 1) * mod;
        mpz_class s = 0;
        for (std::size_t i = 0; i < n; ++i) s += mpz_class(a[i]) * y[i] * y[i];
        if (mpz_divisible_ui_p(s.get_mpz_t(), next_mod) != 0) next.push_back(y);
      }
    }
    level = std::move(next);
    mod = next_mod;
  }
  return level.empty();
}

inline bool anisotropic_at(const std::vector<long>& a, long p) {
  if (p == 0) {
    bool pos = false, neg = false;
    for (long v : a) (v > 0 ? pos : neg) = true;
    return !(pos && neg);
  }
  return p == 2 ? anisotropic_2(a) : anisotropic_odd_p(a, p);
}

/// Hasse support by definition, sum over i < j of brute-force symbols, on
/// the places 2, odd primes up to `bound`, and infinity (p = 0).
inline std::vector<long> hasse_brute(const std::vector<long>& a, long bound) {
  std::vector<long> out;
  for (long p = 2; p <= bound; ++p) {
    if (!is_prime_small(p)) continue;
    int bit = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = i + 1; j < a.size(); ++j) {
        long x = squarefree_small(a[i]), y = squarefree_small(a[j]);
        if (p > 2 && x % p != 0 && y % p != 0) continue;
        bit ^= hilbert_brute(x, y, p);
      }
    }
    if (bit) out.push_back(p);
  }
  int inf = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) inf ^= hilbert_brute_inf(a[i], a[j]);
  }
  if (inf) out.push_back(0);
  return out;
}

// Elements u + v w with w^2 = c (c = d for real, -D for imaginary quadratic).
struct Quad {
  mpq_class u, v;
};
inline Quad mul(const Quad& x, const Quad& y, long c) { return {x.u * y.u + c * x.v * y.v, x.u * y.v + x.v * y.u}; }
// Trace of the multiplication-by-z matrix [[u, c v], [v, u]].
inline mpq_class trace(const Quad& z) { return 2 * z.u; }

// Gram matrix of Tr(alpha x y) on the basis {1, w}, built entry by entry.
inline std::vector<std::vector<mpq_class>> trace_gram(const std::vector<Quad>& alphas, long c, bool hermitian) {
  const Quad basis[2] = {{1, 0}, {0, 1}};
  const std::size_t n = 2 * alphas.size();
  std::vector<std::vector<mpq_class>> g(n, std::vector<mpq_class>(n, 0));
  for (std::size_t k = 0; k < alphas.size(); ++k) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        Quad y = basis[j];
        if (hermitian) y.v = -y.v;
        g[2 * k + i][2 * k + j] = trace(mul(mul(alphas[k], basis[i], c), y, c));
      }
    }
  }
  return g;
}

// Brute-force discriminant class of Q(zeta_n) from the product formula
// disc = (-1)^{phi/2} n^phi / prod p^{phi/(p-1)}, evaluated as an exact
// integer and reduced by trial division.
inline long cyclotomic_disc_brute(long n) {
  long phi = 0;
  for (long k = 1; k <= n; ++k) phi += std::gcd(k, n) == 1 ? 1 : 0;
  mpz_class num = 1;
  for (long i = 0; i < phi; ++i) num *= n;
  for (long p = 2; p <= n; ++p) {
    if (n % p == 0 && is_prime_small(p)) {
      for (long i = 0; i < phi / (p - 1); ++i) num /= p;
    }
  }
  long cls = (phi / 2) % 2 == 0 ? 1 : -1;
  for (long p = 2; p <= n; ++p) {
    if (!is_prime_small(p)) continue;
    int e = 0;
    while (mpz_divisible_ui_p(num.get_mpz_t(), p) != 0) {
      num /= p;
      ++e;
    }
    if (e % 2 == 1) cls *= p;
  }
  return cls;
}

}  // namespace oracle
