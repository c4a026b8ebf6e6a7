#include "tf/arith/real_roots.hpp"

#include "tf/errors.hpp"

namespace tf::arith {

namespace {

int sign_changes(const std::vector<Polynomial>& seq, const Rational& x) {
  int changes = 0, last = 0;
  for (const Polynomial& p : seq) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Strictly larger than the absolute value of every root.
Rational cauchy_bound(const Polynomial& f) {
  Rational m = 0;
  for (int i = 0; i < f.degree(); ++i) {
    Rational q = abs(f.coeff(i) / f.leading());
    if (q > m) m = q;
  }
  return m + 1;
}

// A point strictly inside (lo, hi) that is not a root of f.
Rational split_point(const Polynomial& f, const Rational& lo, const Rational& hi) {
  for (long j = 1;; ++j) {
    Rational t = lo + (hi - lo) * Rational(j, j + 1);
    if (j == 1) t = (lo + hi) / 2;
    if (f.sign_at(t) != 0) return t;
  }
}

// Shrinks an isolating interval of a simple root until it has width at most
// one and, unless the root is an integer, lies between consecutive integers.
RootInterval tighten(const Polynomial& f, Rational lo, Rational hi) {
  const int s_lo = f.sign_at(lo);
  while (true) {
    Integer k;
    mpz_fdiv_q(k.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    k += 1;
    Rational cut;
    if (k < hi && f.sign_at(Rational(k)) != 0) {
      cut = Rational(k);
    } else if (hi - lo > 1) {
      cut = split_point(f, lo, hi);
    } else {
      return {lo, hi};
    }
    if (f.sign_at(cut) == s_lo) {
      lo = cut;
    } else {
      hi = cut;
    }
  }
}

void isolate(const Polynomial& f, const std::vector<Polynomial>& sturm, const Rational& lo,
             const Rational& hi, int count, std::vector<RootInterval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back(tighten(f, lo, hi));
    return;
  }
  Rational mid = split_point(f, lo, hi);
  int left = count_roots(sturm, lo, mid);
  isolate(f, sturm, lo, mid, left, out);
  isolate(f, sturm, mid, hi, count - left, out);
}

}  // namespace

std::vector<Polynomial> sturm_sequence(const Polynomial& f) {
  std::vector<Polynomial> seq{f, f.derivative()};
  while (!seq.back().is_zero()) {
    Polynomial r = -(seq[seq.size() - 2] % seq.back());
    if (r.is_zero()) break;
    seq.push_back(std::move(r));
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int count_roots(const std::vector<Polynomial>& sturm, const Rational& lo, const Rational& hi) {
  return sign_changes(sturm, lo) - sign_changes(sturm, hi);
}

int count_real_roots(const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("real roots of the zero polynomial");
  Polynomial g = squarefree_part(f);
  if (g.degree() < 1) return 0;
  Rational b = cauchy_bound(g);
  return count_roots(sturm_sequence(g), -b, b);
}

std::vector<RootInterval> isolate_real_roots(const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("real roots of the zero polynomial");
  Polynomial g = squarefree_part(f);
  std::vector<RootInterval> out;
  if (g.degree() < 1) return out;
  auto sturm = sturm_sequence(g);
  Rational b = cauchy_bound(g);
  isolate(g, sturm, -b, b, count_roots(sturm, -b, b), out);
  return out;
}

std::vector<int> signs_at_real_roots(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw PreconditionError("sign of the zero polynomial");
  Polynomial sf = squarefree_part(f);
  if (gcd(sf, g).degree() > 0) throw PreconditionError("polynomials share a root");
  std::vector<int> out;
  if (g.degree() == 0) {
    out.assign(isolate_real_roots(sf).size(), sgn(g.leading()));
    return out;
  }
  auto g_sturm = sturm_sequence(squarefree_part(g));
  for (RootInterval iv : isolate_real_roots(sf)) {
    Rational lo = iv.lo, hi = iv.hi;
    // Bisect, keeping the root of sf, until g has no root in [lo, hi].
    while (g.sign_at(lo) == 0 || g.sign_at(hi) == 0 || count_roots(g_sturm, lo, hi) != 0) {
      Rational mid = (lo + hi) / 2;
      int s = sf.sign_at(mid);
      if (s == 0) {
        lo = hi = mid;
        break;
      }
      if (s == sf.sign_at(lo)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    out.push_back(g.sign_at(hi));
  }
  return out;
}

}  // namespace tf::arith
