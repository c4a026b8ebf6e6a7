#include "tf/k3hk/realizability.hpp"

#include "tf/arith/hilbert.hpp"
#include "tf/errors.hpp"
#include "tf/numfields/norms.hpp"
#include "tf/qforms/isotropy.hpp"

namespace tf::k3 {

using arith::Place;
using arith::SquareClass;
using tr::Status;

std::string hodge_group_label(const NumberField& E, int m) {
  return std::string("Res_{E/Q} ") + (E.is_cm() ? "U(W)" : "SO(W)") + ", m=" + std::to_string(m);
}

namespace {

void check_mode(const NumberField& E, Mode mode) {
  if ((mode == Mode::CM) != E.is_cm()) {
    throw PreconditionError("mode " + tr::to_string(mode) + " does not match the field " + E.name());
  }
}

RealizabilityReport base_report(const NumberField& E, int m, Mode mode, int b2) {
  if (m < 1) throw PreconditionError("dimension over E must be >= 1");
  check_mode(E, mode);
  RealizabilityReport rep;
  rep.mode = mode;
  rep.pic_rank = b2 - m * E.degree();
  rep.hodge_group_label = hodge_group_label(E, m);
  return rep;
}

RealizabilityReport reject(RealizabilityReport rep, std::string criterion, std::string note) {
  rep.feasible = false;
  rep.criterion = std::move(criterion);
  rep.notes.push_back(std::move(note));
  return rep;
}

RealizabilityReport decide(RealizabilityReport rep, const QuadraticForm& V, const NumberField& E, int m) {
  TransferVerdict v = tr::split_transfer_feasible(V, E, m, rep.mode);
  rep.feasible = v.feasible();
  rep.criterion = v.criterion;
  if (rep.feasible) {
    if (rep.mode == Mode::RM) {
      rep.family_dimension = m - 2;
    } else {
      rep.family_dimension = m - 1;
      rep.countable = m == 1;
    }
  } else if (v.status == Status::NeedsWitness) {
    rep.notes.push_back("undecided without further data: " + (v.obstruction ? v.obstruction->detail : ""));
  }
  for (const auto& n : v.notes) rep.notes.push_back(n);
  rep.verdict = std::move(v);
  return rep;
}

}  // namespace

RealizabilityReport k3_realizable(const NumberField& E, int m, Mode mode) {
  RealizabilityReport rep = base_report(E, m, mode, 22);
  const int md = m * E.degree();
  if (mode == Mode::RM) {
    if (m < 3) return reject(rep, "rm-dimension", "RM needs dim_E T >= 3");
    if (md > 21) return reject(rep, "projectivity-bound", "md must be at most 21");
  } else if (md > 20) {
    return reject(rep, "projectivity-bound", "md must be at most 20");
  }
  const QuadraticForm V = ambient(Family::K3).rational_form;
  rep = decide(rep, V, E, m);
  if (rep.feasible && mode == Mode::CM && m == 1) {
    if (E.disc_class().is_square()) {
      rep.notes.push_back("disc(E) is a square: Picard lattices H(N), N >= 1, all elliptic");
    } else {
      rep.notes.push_back("infinitely many non-isomorphic transcendental forms");
    }
  }
  return rep;
}

RealizabilityReport hk_realizable(Family family, std::optional<long> n, const NumberField& E, int m, Mode mode) {
  if (family == Family::K3) return k3_realizable(E, m, mode);
  const AmbientSpace A = ambient(family, n);
  const int r = A.b2;
  RealizabilityReport rep = base_report(E, m, mode, r);
  const int md = m * E.degree();
  if (mode == Mode::RM && m < 3) return reject(rep, "rm-dimension", "RM needs dim_E T >= 3");
  if (md > r - 1) {
    return reject(rep, "projectivity-bound", "md must be at most b2 - 1 = " + std::to_string(r - 1));
  }
  rep = decide(rep, A.rational_form, E, m);
  if (mode == Mode::RM && r == 8) rep.notes.push_back("b2 = 8: only d = 2, m = 3 fits");
  if (mode == Mode::CM && r % 2 == 0) rep.notes.push_back("d even: md <= b2 - 2");
  return rep;
}

TransferVerdict picard_compatible(const Matrix& L, const NumberField& E, int m, Mode mode,
                                  const std::optional<arith::Polynomial>& witness) {
  check_mode(E, mode);
  const QuadraticForm Lq = qf::diagonalize(L);
  const int rho = Lq.dim();
  if (rho + m * E.degree() != 22) throw PreconditionError("rank(L) + md must be 22");
  if (Lq.positive_count() != 1) throw PreconditionError("Picard lattice must have signature (1, rank - 1)");
  const QuadraticForm V = ambient(Family::K3).rational_form;

  if (mode == Mode::RM) {
    if (m < 3) throw PreconditionError("dimension over E must be >= 3 for RM");
    auto split = qf::split_complement(V, Lq);
    if (!split) {
      TransferVerdict out;
      out.status = Status::Infeasible;
      out.criterion = "picard-complement";
      out.obstruction = tr::Obstruction{"complement", std::nullopt, "L (x) Q does not embed: " + split.violation};
      return out;
    }
    TransferVerdict out = tr::rm_transfer_feasible(E, *split.complement, witness);
    if (!out.certificate) out.certificate = tr::Certificate{};
    out.certificate->transfer = qf::invariants(*split.complement);
    out.certificate->complement = qf::invariants(Lq);
    out.certificate->complement_form = Lq;
    if (E.degree() % 2 == 0 && E.kind() == nf::FieldKind::RealQuadratic) {
      // The same condition phrased directly on det(L); reported if it differs.
      const SquareClass direct = Lq.det() * E.disc_class();
      const bool shortcut = nf::lambda_plus_quadratic(E.quadratic_parameter(), direct.value());
      if (shortcut != out.feasible()) {
        out.notes.push_back("warning: det(L) disc in Lambda+ gives " + std::string(shortcut ? "true" : "false") +
                            ", the complement criterion decides");
      }
    }
    return out;
  }

  TransferVerdict out;
  out.criterion = "picard-cm";
  const SquareClass disc = (rho * (rho - 1) / 2) % 2 == 0 ? Lq.det() : Lq.det() * SquareClass::from_squarefree(-1);
  const SquareClass want = arith::power(E.disc_class(), static_cast<unsigned long>(m));
  if (disc != want) {
    out.status = Status::Infeasible;
    out.obstruction = tr::Obstruction{"discriminant", std::nullopt,
                                      "disc(L) = " + disc.to_string() + " but disc(E)^m = " + want.to_string()};
    return out;
  }
  std::vector<SquareClass> classes = Lq.entries();
  classes.push_back(E.disc_class());
  const qf::FormInvariants inv = qf::invariants(Lq);
  std::optional<Place> unresolved;
  for (const auto& p : arith::bad_primes(classes)) {
    const nf::SplitStatus st = tr::split_status(E, p.p());
    if (st == nf::SplitStatus::Out || qf::is_locally_hyperbolic(inv, p)) continue;
    if (st == nf::SplitStatus::In) {
      out.status = Status::Infeasible;
      out.obstruction = tr::Obstruction{"local-hyperbolicity", p, "L is not hyperbolic at a prime of S_E"};
      return out;
    }
    if (!unresolved) unresolved = p;
  }
  if (unresolved) {
    out.status = Status::NeedsWitness;
    out.obstruction = tr::Obstruction{"local-hyperbolicity", unresolved, "S_E membership unknown"};
    return out;
  }
  out.status = Status::Feasible;
  out.certificate = tr::Certificate{};
  out.certificate->complement = inv;
  out.certificate->complement_form = Lq;
  if (m == 1) out.notes.push_back("m = 1: isolated surfaces rather than a family");
  return out;
}

std::string to_string(Elliptic e) {
  switch (e) {
    case Elliptic::Yes: return "yes";
    case Elliptic::No: return "no";
    case Elliptic::Undetermined: return "undetermined";
  }
  return "undetermined";
}

Elliptic elliptic_fibration_verdict(const EllipticContext& c) {
  if (c.picard) {
    if (c.field) throw PreconditionError("give either a field or a Picard form, not both");
    const QuadraticForm L = qf::diagonalize(*c.picard);
    if (L.dim() != 2) return Elliptic::Undetermined;
    return qf::represents_zero(L).represents_zero ? Elliptic::Yes : Elliptic::No;
  }
  if (!c.field) throw PreconditionError("elliptic verdict needs a CM field or a Picard form");
  const NumberField& E = *c.field;
  if (!E.is_cm()) throw PreconditionError("elliptic verdict needs a CM field, got " + E.name());
  const int d = E.degree();
  std::optional<int> rho = c.rho;
  if (c.m) {
    if (*c.m < 1 || *c.m * d > 20) throw PreconditionError("md must lie in 1..20");
    const int from_m = 22 - *c.m * d;
    if (rho && *rho != from_m) throw PreconditionError("rho and m are inconsistent");
    rho = from_m;
  }
  if (!rho) throw PreconditionError("elliptic verdict needs m or rho");
  if ((d == 2 || d == 10) && *rho == 2) return Elliptic::Yes;
  if (d == 20) return E.disc_class().is_square() ? Elliptic::Yes : Elliptic::No;
  if (d == 4) return (*rho >= 6 || E.disc_class().is_square()) ? Elliptic::Yes : Elliptic::No;
  return Elliptic::Undetermined;
}

namespace {

Matrix double_sextic_picard() {
  Matrix m(16, std::vector<arith::Rational>(16, arith::Rational(0)));
  m[0][0] = 2;
  for (std::size_t i = 1; i < 16; ++i) m[i][i] = -2;
  return m;
}

std::vector<NamedExample> build_examples() {
  std::vector<NamedExample> out;
  auto elliptic = [&](std::string key, std::string what, NumberField E, int m, std::string expected) {
    out.push_back({std::move(key), std::move(what), "elliptic", std::move(E), m, Mode::CM, std::nullopt,
                   std::move(expected)});
  };
  elliptic("kondo-44", "K3 surface with CM by Q(zeta44)", NumberField::cyclotomic(44), 1, "yes");
  elliptic("kondo-66", "K3 surface with CM by Q(zeta66)", NumberField::cyclotomic(66), 1, "yes");
  elliptic("vorontsov-25", "K3 surface with CM by Q(zeta25)", NumberField::cyclotomic(25), 1, "no");
  for (long d : {2L, 3L, 5L}) {
    out.push_back({"double-sextic-d" + std::to_string(d),
                   "double cover of P2 branched along six lines, RM by Q(sqrt" + std::to_string(d) + ")", "picard",
                   NumberField::real_quadratic(d), 3, Mode::RM, double_sextic_picard(),
                   d == 3 ? "infeasible" : "feasible"});
  }
  elliptic("non-symplectic-order-3", "very general K3 with a non-symplectic automorphism of order 3",
           NumberField::imag_quadratic(3), 10, "yes");
  elliptic("non-symplectic-order-5", "very general K3 with a non-symplectic automorphism of order 5",
           NumberField::cyclotomic(5), 5, "no");
  return out;
}

}  // namespace

const std::vector<NamedExample>& famous_examples() {
  static const std::vector<NamedExample> examples = build_examples();
  return examples;
}

const NamedExample& famous_example(const std::string& key) {
  for (const auto& e : famous_examples()) {
    if (e.key == key) return e;
  }
  throw PreconditionError("unknown example '" + key + "'");
}

std::string evaluate_example(const NamedExample& example) {
  if (example.kind == "elliptic") {
    EllipticContext c;
    c.field = example.field;
    c.m = example.m;
    return to_string(elliptic_fibration_verdict(c));
  }
  return tr::to_string(picard_compatible(*example.picard, example.field, example.m, example.mode).status);
}

}  // namespace tf::k3
