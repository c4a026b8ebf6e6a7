#include "tf/numfields/field.hpp"

#include "tf/arith/factor.hpp"
#include "tf/arith/hilbert.hpp"
#include "tf/arith/real_roots.hpp"
#include "tf/errors.hpp"

namespace tf::nf {

namespace {

void require_squarefree(const Integer& v, const char* what) {
  if (arith::squarefree_part(v) != v) throw PreconditionError(std::string(what) + " must be squarefree");
}

void require_totally_real(const Polynomial& f) {
  if (f.degree() < 1 || !f.is_monic()) throw PreconditionError("minimal polynomial must be monic of degree >= 1");
  if (arith::count_real_roots(f) != f.degree()) {
    throw PreconditionError("minimal polynomial " + f.to_string() + " is not totally real");
  }
}

SquareClass poly_disc_class(const Polynomial& f) { return SquareClass(arith::discriminant(f)); }

}  // namespace

NumberField NumberField::real_quadratic(const Integer& d) {
  if (d <= 1) throw PreconditionError("real quadratic field needs d > 1");
  require_squarefree(d, "d");
  NumberField E;
  E.kind_ = FieldKind::RealQuadratic;
  E.degree_ = 2;
  E.param_ = d;
  E.disc_ = SquareClass::from_squarefree(d);
  E.minpoly_ = Polynomial{Rational(-d), 0, 1};
  return E;
}

NumberField NumberField::imag_quadratic(const Integer& D) {
  if (D <= 0) throw PreconditionError("imaginary quadratic field needs D > 0");
  require_squarefree(D, "D");
  NumberField E;
  E.kind_ = FieldKind::ImagQuadratic;
  E.degree_ = 2;
  E.param_ = D;
  E.disc_ = SquareClass::from_squarefree(-D);
  E.minpoly_ = Polynomial{1};
  return E;
}

NumberField NumberField::cyclotomic(long n) {
  if (n < 3) throw PreconditionError("cyclotomic field needs n >= 3");
  NumberField E;
  E.kind_ = FieldKind::Cyclotomic;
  E.label_n_ = n;
  // Q(zeta_2k) = Q(zeta_k) for odd k.
  E.n_ = n % 4 == 2 ? n / 2 : n;
  E.degree_ = static_cast<int>(euler_phi(n));
  E.disc_ = cyclotomic_disc_class(n);
  return E;
}

NumberField NumberField::general_totally_real(const Polynomial& minpoly, const std::optional<SquareClass>& disc,
                                              std::vector<Polynomial> witnesses) {
  require_totally_real(minpoly);
  NumberField E;
  E.kind_ = FieldKind::GeneralTotallyReal;
  E.degree_ = minpoly.degree();
  E.minpoly_ = minpoly;
  E.disc_ = minpoly.degree() == 1 ? SquareClass() : poly_disc_class(minpoly);
  if (disc && *disc != E.disc_) {
    throw PreconditionError("supplied discriminant class " + disc->to_string() +
                            " disagrees with the polynomial discriminant class " + E.disc_.to_string());
  }
  E.witnesses_ = std::move(witnesses);
  return E;
}

NumberField NumberField::general_cm(const Polynomial& real_minpoly, const std::optional<Polynomial>& theta,
                                    const std::optional<SquareClass>& disc, std::map<Integer, bool> split_primes) {
  require_totally_real(real_minpoly);
  NumberField E;
  E.kind_ = FieldKind::GeneralCM;
  E.degree_ = 2 * real_minpoly.degree();
  E.minpoly_ = real_minpoly;
  const int d0 = real_minpoly.degree();
  if (theta) {
    for (int s : arith::signs_at_real_roots(real_minpoly, *theta)) {
      if (s > 0) throw PreconditionError("theta must be totally negative");
    }
    E.theta_ = *theta % real_minpoly;
    E.disc_ = SquareClass(arith::norm_via_resultant(real_minpoly, *theta));
    if (disc && *disc != E.disc_) {
      throw PreconditionError("supplied discriminant class " + disc->to_string() +
                              " disagrees with the class of N(theta) " + E.disc_.to_string());
    }
  } else if (disc) {
    E.disc_ = *disc;
  } else {
    throw PreconditionError("general CM field needs theta or a discriminant class");
  }
  if (E.disc_.sign() != (d0 % 2 == 0 ? 1 : -1)) {
    throw PreconditionError("discriminant of a CM field of degree " + std::to_string(E.degree_) +
                            " has sign (-1)^" + std::to_string(d0));
  }
  for (const auto& [p, in] : split_primes) {
    if (!arith::is_prime(p)) throw PreconditionError("split-prime table key " + p.get_str() + " is not prime");
  }
  E.split_ = std::move(split_primes);
  return E;
}

std::string NumberField::name() const {
  switch (kind_) {
    case FieldKind::RealQuadratic:
      return "Q(sqrt" + param_.get_str() + ")";
    case FieldKind::ImagQuadratic:
      return "Q(sqrt-" + param_.get_str() + ")";
    case FieldKind::Cyclotomic:
      return "Q(zeta" + std::to_string(label_n_) + ")";
    case FieldKind::GeneralTotallyReal:
      return "Q[x]/(" + minpoly_.to_string() + ")";
    case FieldKind::GeneralCM:
      return "CM over Q[x]/(" + minpoly_.to_string() + ")";
  }
  return "";
}

FieldInvariants field_invariants(const NumberField& E) {
  return {E.degree(), E.is_cm() ? E.half_degree() : 0, E.disc_class(), E.is_cm()};
}

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

SquareClass cyclotomic_disc_class(long n) {
  // disc Q(zeta_n) = (-1)^{phi/2} n^phi / prod_{p | n} p^{phi/(p-1)}.
  const long phi = euler_phi(n);
  Integer cls = (phi / 2) % 2 == 0 ? 1 : -1;
  long rest = n;
  for (long p = 2; p <= rest; ++p) {
    if (rest % p != 0) continue;
    long v = 0;
    while (rest % p == 0) {
      rest /= p;
      ++v;
    }
    if ((v * phi - phi / (p - 1)) % 2 != 0) cls *= p;
  }
  return SquareClass::from_squarefree(cls);
}

std::string to_string(SplitStatus s) {
  switch (s) {
    case SplitStatus::In:
      return "in";
    case SplitStatus::Out:
      return "out";
    case SplitStatus::Unknown:
      return "unknown";
  }
  return "";
}

SplitStatus in_SE(const NumberField& E, const Integer& p) {
  if (!E.is_cm()) throw PreconditionError("S_E is defined for CM fields only");
  if (!arith::is_prime(p)) throw PreconditionError(p.get_str() + " is not a prime");
  switch (E.kind()) {
    case FieldKind::ImagQuadratic: {
      SquareClass minus_d = SquareClass::from_squarefree(Integer(-E.quadratic_parameter()));
      return arith::is_local_square(minus_d, arith::Place::prime(p)) ? SplitStatus::In : SplitStatus::Out;
    }
    case FieldKind::Cyclotomic: {
      const long n = E.conductor();
      if (Integer(n) % p == 0) return SplitStatus::Unknown;
      const long g = static_cast<long>(mpz_fdiv_ui(p.get_mpz_t(), n));
      long x = 1;
      do {
        x = x * g % n;
        if (x == n - 1) return SplitStatus::Out;
      } while (x != 1);
      return SplitStatus::In;
    }
    case FieldKind::GeneralCM: {
      auto it = E.split_primes().find(p);
      if (it == E.split_primes().end()) return SplitStatus::Unknown;
      return it->second ? SplitStatus::In : SplitStatus::Out;
    }
    default:
      break;
  }
  throw PreconditionError("S_E is defined for CM fields only");
}

}  // namespace tf::nf
