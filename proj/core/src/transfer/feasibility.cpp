#include "tf/transfer/feasibility.hpp"

#include <algorithm>
#include <set>

#include "tf/arith/factor.hpp"
#include "tf/arith/hilbert.hpp"
#include "tf/errors.hpp"
#include "tf/numfields/norms.hpp"

namespace tf::tr {

std::string to_string(Status s) {
  switch (s) {
    case Status::Feasible: return "feasible";
    case Status::Infeasible: return "infeasible";
    case Status::NeedsWitness: return "needs_witness";
  }
  return "unknown";
}

std::string to_string(Mode m) { return m == Mode::RM ? "rm" : "cm"; }

Mode parse_mode(const std::string& text) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (t == "rm") return Mode::RM;
  if (t == "cm") return Mode::CM;
  throw PreconditionError("mode must be rm or cm, got '" + text + "'");
}

nf::SplitStatus split_status(const NumberField& E, const Integer& p) {
  const nf::SplitStatus st = nf::in_SE(E, p);
  if (st == nf::SplitStatus::Unknown && !arith::is_local_square(E.disc_class(), Place::prime(p))) {
    return nf::SplitStatus::Out;
  }
  return st;
}

namespace {

const SquareClass kMinusOne = SquareClass::from_squarefree(-1);

TransferVerdict make(Status status, std::string criterion) {
  TransferVerdict v;
  v.status = status;
  v.criterion = std::move(criterion);
  return v;
}

TransferVerdict infeasible(std::string criterion, std::string condition, std::optional<Place> place,
                           std::string detail) {
  TransferVerdict v = make(Status::Infeasible, std::move(criterion));
  v.obstruction = Obstruction{std::move(condition), std::move(place), std::move(detail)};
  return v;
}

// A place where the class c is not a local square: the real place, then odd
// primes ascending, then 2. c must not be a square.
Place nonsquare_place(const SquareClass& c) {
  if (c.sign() < 0) return Place::infinity();
  const auto primes = c.primes();
  for (const auto& p : primes) {
    if (p != 2) return Place::prime(p);
  }
  return Place::prime(2);
}

std::optional<Place> first_failure(const arith::BrauerSupport& support) {
  if (support.empty()) return std::nullopt;
  if (support.contains(Place::infinity())) return Place::infinity();
  for (const auto& v : support.places()) {
    if (v.p() != 2) return v;
  }
  return support.places().front();
}

bool is_k3_form(const FormInvariants& inv) {
  return inv == FormInvariants{22, kMinusOne, 3, 19, {Place::prime(2), Place::infinity()}};
}

int dimension_over(const NumberField& E, const QuadraticForm& U) {
  const int d = E.degree();
  if (U.dim() == 0 || U.dim() % d != 0) {
    throw PreconditionError("dimension " + std::to_string(U.dim()) + " is not a positive multiple of the degree " +
                            std::to_string(d));
  }
  return U.dim() / d;
}

std::vector<SquareClass> with_disc(const QuadraticForm& U, const NumberField& E) {
  std::vector<SquareClass> classes = U.entries();
  classes.push_back(E.disc_class());
  return classes;
}

}  // namespace

TransferVerdict cm_transfer_feasible(const NumberField& E, const QuadraticForm& U) {
  if (!E.is_cm()) throw PreconditionError("hermitian transfer needs a CM field, got " + E.name());
  const int m = dimension_over(E, U);
  const std::string crit = "cm-realization";
  const int r = U.positive_count();
  const int s = U.negative_count();
  if (r % 2 != 0 || s % 2 != 0) {
    return infeasible(crit, "signature-parity", Place::infinity(),
                      "signature (" + std::to_string(r) + "," + std::to_string(s) + ") has an odd part");
  }
  const SquareClass want = cm_transfer_det(E, m);
  if (U.det() != want) {
    return infeasible(crit, "determinant", nonsquare_place(U.det() * want),
                      "det " + U.det().to_string() + " differs from " + want.to_string());
  }
  const FormInvariants inv = qf::invariants(U);
  std::vector<Place> unresolved;
  for (const auto& v : arith::bad_primes(with_disc(U, E))) {
    const nf::SplitStatus st = split_status(E, v.p());
    if (st == nf::SplitStatus::Out || qf::is_locally_hyperbolic(inv, v)) continue;
    if (st == nf::SplitStatus::In) {
      return infeasible(crit, "local-hyperbolicity", v, "not hyperbolic at a prime of S_E");
    }
    unresolved.push_back(v);
  }
  if (!unresolved.empty()) {
    TransferVerdict out = make(Status::NeedsWitness, crit);
    out.obstruction = Obstruction{"local-hyperbolicity", unresolved.front(),
                                  "not hyperbolic where S_E membership is unknown"};
    return out;
  }
  TransferVerdict out = make(Status::Feasible, crit);
  out.certificate = Certificate{};
  out.certificate->transfer = inv;
  return out;
}

TransferVerdict rm_transfer_feasible(const NumberField& E, const QuadraticForm& U,
                                     const std::optional<Polynomial>& witness) {
  if (!E.is_totally_real()) throw PreconditionError("quadratic transfer needs a totally real field, got " + E.name());
  const int m = dimension_over(E, U);
  if (m < 3) throw PreconditionError("dimension over E must be >= 3, got " + std::to_string(m));
  const int d = E.degree();
  if (U.positive_count() != 2) {
    throw PreconditionError("signature must be (2," + std::to_string(m * d - 2) + ")");
  }
  const FormInvariants inv = qf::invariants(U);
  auto feasible = [&](std::string crit) {
    TransferVerdict out = make(Status::Feasible, std::move(crit));
    out.certificate = Certificate{};
    out.certificate->transfer = inv;
    return out;
  };
  if (d % 2 != 0) return feasible("odd-degree");

  const std::string crit = "even-degree-norm";
  const SquareClass target = U.det() * arith::power(E.disc_class(), static_cast<unsigned long>(m));
  if (target.sign() < 0) {
    return infeasible(crit, "norm", Place::infinity(), "det(U) disc^m is negative");
  }
  if (E.kind() == nf::FieldKind::RealQuadratic) {
    const Integer& dd = E.quadratic_parameter();
    if (nf::lambda_plus_quadratic(dd, target.value())) return feasible(crit);
    const auto place = first_failure(arith::hilbert_support(target, SquareClass::from_squarefree(dd)));
    return infeasible(crit, "norm", place, target.to_string() + " is not a norm from " + E.name());
  }
  std::vector<Polynomial> candidates;
  if (witness) candidates.push_back(*witness);
  for (const auto& w : E.witnesses()) candidates.push_back(w);
  for (const auto& alpha : candidates) {
    if (nf::verify_lambda_plus_witness(E, U.det(), m, alpha)) {
      TransferVerdict out = feasible(crit);
      out.notes.push_back("totally positive witness " + alpha.to_string());
      return out;
    }
  }
  TransferVerdict out = make(Status::NeedsWitness, crit);
  out.obstruction = Obstruction{"norm", std::nullopt,
                                "no totally positive element with norm class " + target.to_string() + " supplied"};
  return out;
}

namespace {

struct Ambient {
  QuadraticForm V;
  FormInvariants inv;
  int r = 0;
  int s = 0;
};

// Candidate classes for free parameters of complements: +-1, then signed
// products of up to three primes from `primes`, ordered by size.
std::vector<SquareClass> parameter_classes(std::set<Integer> primes) {
  for (long p : {2L, 3L, 5L, 7L}) primes.insert(Integer(p));
  std::vector<Integer> ps(primes.begin(), primes.end());
  std::set<Integer> values{Integer(1)};
  for (std::size_t i = 0; i < ps.size(); ++i) {
    values.insert(ps[i]);
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      values.insert(ps[i] * ps[j]);
      for (std::size_t k = j + 1; k < ps.size(); ++k) values.insert(ps[i] * ps[j] * ps[k]);
    }
  }
  std::vector<SquareClass> out;
  for (const auto& v : values) {
    out.push_back(SquareClass::from_squarefree(v));
    out.push_back(SquareClass::from_squarefree(-v));
  }
  return out;
}

std::set<Integer> primes_of(const std::vector<SquareClass>& classes) {
  std::set<Integer> out;
  for (const auto& c : classes) {
    for (const auto& p : c.primes()) out.insert(p);
  }
  return out;
}

// Decides one candidate complement: the transfer part is the complement of
// V' in V; it must be admissible and pass the transfer criterion.
TransferVerdict try_complement(const Ambient& A, const NumberField& E, Mode mode, int md,
                               const QuadraticForm& Vp, const std::string& crit) {
  const FormInvariants vp = qf::invariants(Vp);
  auto u = qf::complement_invariants(A.inv, vp);
  if (!u || u->r != 2 || u->s != md - 2) {
    return infeasible(crit, "signature", Place::infinity(), "complement does not leave signature (2, md-2)");
  }
  if (!qf::is_admissible(*u)) {
    return infeasible(crit, "complement", std::nullopt, "V does not contain " + Vp.to_string());
  }
  const QuadraticForm U = qf::form_from_invariants(*u);
  TransferVerdict sub = mode == Mode::CM ? cm_transfer_feasible(E, U) : rm_transfer_feasible(E, U);
  TransferVerdict out = sub;
  out.criterion = crit;
  out.notes.insert(out.notes.begin(), "transfer part decided by " + sub.criterion);
  out.certificate = Certificate{};
  out.certificate->transfer = *u;
  out.certificate->complement = vp;
  out.certificate->complement_form = Vp;
  return out;
}

// An explicit W over Q(sqrt d) whose transfer splits off V, with one
// embedding of signature (2, m-2) and the other negative definite.
std::optional<Certificate> real_quadratic_certificate(const Ambient& A, const Integer& d, int m) {
  for (long pos = 1; pos <= 4; ++pos) {
    for (long neg = 1; neg <= 6; ++neg) {
      // x + sqrt d with x^2 < d is positive at sqrt d and negative at -sqrt d.
      for (long x = 0; Rational(x * x) < Rational(d); ++x) {
        std::vector<QuadFieldElement> W{{Rational(x), Rational(1)}, {Rational(x), Rational(pos)}};
        for (int i = 2; i < m; ++i) W.push_back({Rational(-neg), Rational(0)});
        if (!condition_C_profile(d, W).holds) continue;
        const QuadraticForm T = transfer_quadratic(d, W);
        auto split = qf::split_complement(A.V, T);
        if (!split) continue;
        Certificate c;
        c.W = W;
        c.transfer = qf::invariants(T);
        c.complement = qf::invariants(*split.complement);
        c.complement_form = split.complement;
        return c;
      }
    }
  }
  return std::nullopt;
}

std::optional<Certificate> imag_quadratic_certificate(const Ambient& A, const Integer& D, int m) {
  for (long neg = 1; neg <= 6; ++neg) {
    for (long pos = 1; pos <= 6; ++pos) {
      std::vector<Rational> W{Rational(pos)};
      for (int i = 1; i < m; ++i) W.push_back(Rational(-neg));
      const QuadraticForm T = transfer_hermitian_imagquad(D, W);
      auto split = qf::split_complement(A.V, T);
      if (!split) continue;
      Certificate c;
      c.transfer = qf::invariants(T);
      c.complement = qf::invariants(*split.complement);
      c.complement_form = split.complement;
      c.infinitely_many = m == 1;
      return c;
    }
  }
  return std::nullopt;
}

TransferVerdict split_cm(const Ambient& A, const NumberField& E, int m, int md) {
  const int codim = A.V.dim() - md;
  const SquareClass delta = cm_transfer_det(E, m);
  if (codim >= 3) {
    TransferVerdict out = make(Status::Feasible, "cm-large-codimension");
    if (E.kind() == nf::FieldKind::ImagQuadratic) {
      out.certificate = imag_quadratic_certificate(A, E.quadratic_parameter(), m);
    }
    if (!out.certificate) out.certificate = Certificate{};
    out.certificate->infinitely_many = m == 1;
    return out;
  }
  if (codim == 1) {
    const QuadraticForm Vp({A.V.det() * delta});
    TransferVerdict out = try_complement(A, E, Mode::CM, md, Vp, "cm-codimension-1");
    if (out.certificate) out.certificate->complement_forced = true;
    return out;
  }
  // Codimension 2: V' = <a, a det(V) delta> for a free class a.
  const SquareClass b = A.V.det() * delta;
  const std::string crit = "cm-codimension-2";
  std::vector<SquareClass> pool = A.V.entries();
  pool.push_back(E.disc_class());
  std::optional<TransferVerdict> pending;
  int tried = 0;
  for (const auto& a : parameter_classes(primes_of(pool))) {
    const QuadraticForm Vp({a, a * b});
    if (Vp.positive_count() != A.r - 2) continue;
    ++tried;
    TransferVerdict v = try_complement(A, E, Mode::CM, md, Vp, crit);
    if (v.status == Status::Feasible) {
      // A binary form of determinant -1 is the hyperbolic plane.
      v.certificate->complement_forced = b == kMinusOne;
      v.certificate->infinitely_many = m == 1 && !(b == kMinusOne);
      return v;
    }
    if (v.status == Status::NeedsWitness && !pending) pending = v;
  }
  if (pending && is_k3_form(A.inv)) {
    // For the K3 form every <a, -a delta> splits off a transfer: the
    // complement's Hasse invariant agrees with H^10 at all primes of S_E.
    TransferVerdict out = *pending;
    out.status = Status::Feasible;
    out.obstruction.reset();
    out.certificate->complement_forced = b == kMinusOne;
    out.certificate->infinitely_many = m == 1 && !(b == kMinusOne);
    out.notes.push_back("hyperbolicity at S_E holds for every complement of this shape");
    return out;
  }
  if (pending) return *pending;
  TransferVerdict out = make(Status::NeedsWitness, crit);
  out.obstruction = Obstruction{"complement", std::nullopt,
                                "no complement among " + std::to_string(tried) + " candidates passed"};
  return out;
}

TransferVerdict split_rm(const Ambient& A, const NumberField& E, int m, int md) {
  const int codim = A.V.dim() - md;
  if (codim >= 2) {
    // A W with the required embedding profile always splits off V here.
    TransferVerdict out = make(Status::Feasible, codim == 2 ? "rm-codimension-2" : "rm-large-codimension");
    if (E.kind() == nf::FieldKind::RealQuadratic) {
      out.certificate = real_quadratic_certificate(A, E.quadratic_parameter(), m);
    }
    if (!out.certificate) out.notes.push_back("existence without an explicit W");
    return out;
  }
  // Codimension 1: V' = <h>; the sign of h is forced by the signature.
  const int sign = A.r == 3 ? 1 : -1;
  const SquareClass preferred = A.V.det() * arith::power(E.disc_class(), static_cast<unsigned long>(m));
  std::vector<SquareClass> hs;
  if (preferred.sign() == sign) hs.push_back(preferred);
  std::vector<SquareClass> pool = A.V.entries();
  pool.push_back(E.disc_class());
  for (const auto& h : parameter_classes(primes_of(pool))) {
    if (h.sign() == sign && h != preferred) hs.push_back(h);
  }
  const std::string crit = "rm-codimension-1";
  std::optional<TransferVerdict> pending;
  std::optional<TransferVerdict> first_failure;
  for (const auto& h : hs) {
    TransferVerdict v = try_complement(A, E, Mode::RM, md, QuadraticForm({h}), crit);
    if (v.status == Status::Feasible) {
      if (E.degree() % 2 != 0) v.notes.push_back("every h of sign " + std::to_string(sign) + " works");
      return v;
    }
    if (v.status == Status::NeedsWitness && !pending) pending = v;
    if (!first_failure) first_failure = v;
  }
  if (pending) return *pending;
  if (E.degree() % 2 == 0 && preferred.sign() != sign) {
    return infeasible(crit, "norm", Place::infinity(), "det(V) h disc^m is negative for every admissible h");
  }
  if (first_failure) return *first_failure;
  return infeasible(crit, "complement", std::nullopt, "no admissible complement");
}

}  // namespace

TransferVerdict split_transfer_feasible(const QuadraticForm& V, const NumberField& E, int m, Mode mode,
                                        const std::optional<QuadraticForm>& complement) {
  if ((mode == Mode::CM) != E.is_cm()) {
    throw PreconditionError("mode " + to_string(mode) + " does not match the field " + E.name());
  }
  if (m < 1) throw PreconditionError("dimension over E must be >= 1");
  if (mode == Mode::RM && m < 3) throw PreconditionError("dimension over E must be >= 3 for RM");
  const int md = m * E.degree();
  if (md > V.dim() - 1) {
    throw PreconditionError("md = " + std::to_string(md) + " exceeds dim(V) - 1 = " + std::to_string(V.dim() - 1));
  }
  Ambient A{V, qf::invariants(V), V.positive_count(), V.negative_count()};
  if (A.r < 2) throw PreconditionError("V needs at least two positive directions");
  if (md - 2 > A.s) {
    return infeasible(mode == Mode::CM ? "cm-signature" : "rm-signature", "signature", Place::infinity(),
                      "(2," + std::to_string(md - 2) + ") does not fit into the signature of V");
  }
  if (complement) {
    if (complement->dim() != V.dim() - md) throw PreconditionError("complement has the wrong dimension");
    return try_complement(A, E, mode, md, *complement, "given-complement");
  }
  return mode == Mode::CM ? split_cm(A, E, m, md) : split_rm(A, E, m, md);
}

TransferVerdict validate_complement_symbol(const NumberField& E, const Rational& a, const SquareClass& u,
                                           const SquareClass& v) {
  if (!E.is_cm()) throw PreconditionError("complement symbol check needs a CM field");
  if (a == 0) throw PreconditionError("complement parameter must be nonzero");
  const SquareClass ca(a);
  const std::string crit = "complement-symbol";
  std::optional<Place> unresolved;
  for (const auto& p : arith::bad_primes({u, v, ca, E.disc_class()})) {
    const nf::SplitStatus st = split_status(E, p.p());
    if (st == nf::SplitStatus::Out || arith::hilbert_symbol(u, v * ca, p) == 0) continue;
    if (st == nf::SplitStatus::In) return infeasible(crit, "symbol", p, "symbol nontrivial at a prime of S_E");
    if (!unresolved) unresolved = p;
  }
  if (unresolved) {
    TransferVerdict out = make(Status::NeedsWitness, crit);
    out.obstruction = Obstruction{"symbol", unresolved, "S_E membership unknown"};
    return out;
  }
  return make(Status::Feasible, crit);
}

}  // namespace tf::tr
