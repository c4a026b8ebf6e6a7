#include "tf/qforms/classify.hpp"

#include <algorithm>
#include <set>

#include "tf/arith/factor.hpp"
#include "tf/arith/hilbert.hpp"
#include "tf/errors.hpp"

namespace tf::qf {

using arith::hilbert_support;
using arith::hilbert_symbol;
using arith::is_local_square;

namespace {

const SquareClass kMinusOne = SquareClass::from_squarefree(-1);

int real_hasse_bit(int s) { return (s * (s - 1) / 2) % 2; }

// Hasse bit of H^k at a finite place.
int hyperbolic_hasse_bit(int k, const Place& v) {
  if (v.is_infinite()) return real_hasse_bit(k);
  if (v.p() != 2) return 0;
  return (k % 4 == 2 || k % 4 == 3) ? 1 : 0;
}

std::vector<Place> finite_candidates(const std::vector<SquareClass>& classes, const BrauerSupport& extra) {
  std::set<Place> places;
  for (const Place& v : arith::bad_primes(classes)) places.insert(v);
  for (const Place& v : extra.places()) {
    if (!v.is_infinite()) places.insert(v);
  }
  return {places.begin(), places.end()};
}

// A binary form <a, a*det> with Hasse support `hasse` and the requested
// signature, assuming the invariants are admissible.
QuadraticForm binary_from_invariants(const SquareClass& det, const BrauerSupport& hasse, int r) {
  const SquareClass minus_det = det * kMinusOne;
  // (a, a det) = (a, -det); the real bit is handled by the sign of a.
  const int sign = (det.sign() < 0 || r == 2) ? 1 : -1;
  std::vector<Place> s = finite_candidates({det}, hasse);
  std::vector<Integer> primes;
  for (const Place& v : s) primes.push_back(v.p());
  if (primes.size() > 20) throw Error("too many ramified places to construct a binary form");

  auto matches = [&](const SquareClass& a, const std::optional<Place>& extra) {
    for (const Place& v : s) {
      if (hilbert_symbol(a, minus_det, v) != (hasse.contains(v) ? 1 : 0)) return false;
    }
    return !extra || hilbert_symbol(a, minus_det, *extra) == 0;
  };

  const std::uint64_t subsets = std::uint64_t{1} << primes.size();
  Integer q = 1;
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::optional<Place> extra;
    if (q != 1) extra = Place::prime(q);
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      Integer a = sign * q;
      for (std::size_t i = 0; i < primes.size(); ++i) {
        if ((mask >> i) & 1) a *= primes[i];
      }
      SquareClass ca = SquareClass::from_squarefree(a);
      if (matches(ca, extra)) return QuadraticForm({ca, ca * det});
    }
    // Next prime outside the candidate set.
    do {
      mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
    } while (std::find(primes.begin(), primes.end(), q) != primes.end());
  }
  throw Error("binary form search did not terminate");
}

// Squarefree integers 1, 2, 3, 5, 6, 7, 10, ... in increasing order.
Integer next_squarefree(Integer c) {
  while (true) {
    ++c;
    if (c == 1 || arith::squarefree_part(c) == c) return c;
  }
}

}  // namespace

std::string FormInvariants::to_string() const {
  return "(dim " + std::to_string(dim) + ", det " + det.to_string() + ", sig (" + std::to_string(r) +
         "," + std::to_string(s) + "), hasse " + hasse.to_string() + ")";
}

FormInvariants invariants(const QuadraticForm& f) {
  FormInvariants inv;
  inv.dim = f.dim();
  inv.r = f.positive_count();
  inv.s = f.negative_count();
  const auto& a = f.entries();
  std::vector<Place> places = finite_candidates(a, {});
  places.push_back(Place::infinity());
  // w(V + <a>) = w(V) + (det V, a).
  std::vector<SquareClass> prefix;
  prefix.reserve(a.size());
  SquareClass det;
  for (const SquareClass& c : a) {
    prefix.push_back(det);
    det *= c;
  }
  inv.det = det;
  for (const Place& v : places) {
    int bit = 0;
    for (std::size_t i = 1; i < a.size(); ++i) bit ^= hilbert_symbol(prefix[i], a[i], v);
    if (bit) inv.hasse.toggle(v);
  }
  return inv;
}

int hasse_bit(const FormInvariants& inv, const Place& v) { return inv.hasse.contains(v) ? 1 : 0; }

FormInvariants sum_invariants(const FormInvariants& a, const FormInvariants& b) {
  FormInvariants out;
  out.dim = a.dim + b.dim;
  out.det = a.det * b.det;
  out.r = a.r + b.r;
  out.s = a.s + b.s;
  out.hasse = a.hasse + b.hasse + hilbert_support(a.det, b.det);
  return out;
}

bool is_isomorphic(const QuadraticForm& f, const QuadraticForm& g) {
  return invariants(f) == invariants(g);
}

bool is_locally_isomorphic(const FormInvariants& f, const FormInvariants& g, const Place& v) {
  if (f.dim != g.dim) return false;
  if (v.is_infinite()) return f.r == g.r;
  return is_local_square(f.det * g.det, v) && hasse_bit(f, v) == hasse_bit(g, v);
}

bool is_locally_isomorphic(const QuadraticForm& f, const QuadraticForm& g, const Place& v) {
  return is_locally_isomorphic(invariants(f), invariants(g), v);
}

bool is_locally_hyperbolic(const FormInvariants& f, const Place& v) {
  if (f.dim % 2 != 0) return false;
  const int k = f.dim / 2;
  if (v.is_infinite()) return f.r == f.s;
  const SquareClass target = k % 2 == 0 ? SquareClass() : kMinusOne;
  return is_local_square(f.det * target, v) && hasse_bit(f, v) == hyperbolic_hasse_bit(k, v);
}

bool is_locally_hyperbolic(const QuadraticForm& f, const Place& v) {
  return is_locally_hyperbolic(invariants(f), v);
}

void check_admissible(const FormInvariants& t) {
  if (t.dim < 0 || t.r < 0 || t.s < 0 || t.r + t.s != t.dim) {
    throw AdmissibilityError("signature-dimension", "signature does not add up to the dimension");
  }
  if (t.det.sign() != (t.s % 2 == 0 ? 1 : -1)) {
    throw AdmissibilityError("condition-1", "sign of det must be (-1)^s");
  }
  if (hasse_bit(t, Place::infinity()) != real_hasse_bit(t.s)) {
    throw AdmissibilityError("condition-2", "real Hasse bit must be s(s-1)/2 mod 2");
  }
  if (!t.hasse.is_even()) {
    throw AdmissibilityError("reciprocity", "Hasse invariant must be nontrivial at an even number of places");
  }
  if (t.dim == 0 && !t.det.is_square()) {
    throw AdmissibilityError("condition-3", "the zero form has square determinant");
  }
  if (t.dim <= 1 && !t.hasse.empty()) {
    throw AdmissibilityError("condition-3", "forms of dimension <= 1 have trivial Hasse invariant");
  }
  if (t.dim == 2) {
    const SquareClass minus_det = t.det * kMinusOne;
    for (const Place& v : t.hasse.places()) {
      if (!v.is_infinite() && is_local_square(minus_det, v)) {
        throw AdmissibilityError("condition-3", "Hasse bit must vanish at " + v.to_string() +
                                                    " where -det is a local square");
      }
    }
  }
}

bool is_admissible(const FormInvariants& target) {
  try {
    check_admissible(target);
    return true;
  } catch (const AdmissibilityError&) {
    return false;
  }
}

QuadraticForm form_from_invariants(const FormInvariants& target) {
  check_admissible(target);
  FormInvariants t = target;
  std::vector<SquareClass> prefix;
  // Peel <1> (or <-1> when there is no positive part) down to dimension 3.
  // With V = <e> + V'': w(V'') = w(V) + (e, det V'').
  while (t.dim > 3) {
    const bool positive = t.r > 0;
    const SquareClass e = positive ? SquareClass() : kMinusOne;
    t.det *= e;
    if (positive) {
      --t.r;
    } else {
      --t.s;
      t.hasse += hilbert_support(kMinusOne, t.det);
    }
    --t.dim;
    prefix.push_back(e);
  }
  QuadraticForm tail;
  if (t.dim == 0) {
    tail = QuadraticForm();
  } else if (t.dim == 1) {
    tail = QuadraticForm({t.det});
  } else if (t.dim == 2) {
    tail = binary_from_invariants(t.det, t.hasse, t.r);
  } else {
    // V = <c> + B with det B = c det, w(B) = w(V) + (c, -det).
    const int sign = t.r > 0 ? 1 : -1;
    const SquareClass minus_det = t.det * kMinusOne;
    Integer c = 1;
    while (true) {
      SquareClass cc = SquareClass::from_squarefree(Integer(sign * c));
      FormInvariants b;
      b.dim = 2;
      b.det = cc * t.det;
      b.r = t.r - (sign > 0 ? 1 : 0);
      b.s = t.s - (sign > 0 ? 0 : 1);
      b.hasse = t.hasse + hilbert_support(cc, minus_det);
      if (is_admissible(b)) {
        tail = direct_sum(QuadraticForm({cc}), binary_from_invariants(b.det, b.hasse, b.r));
        break;
      }
      c = next_squarefree(c);
    }
  }
  std::vector<SquareClass> d = prefix;
  d.insert(d.end(), tail.entries().begin(), tail.entries().end());
  return QuadraticForm(std::move(d));
}

std::optional<FormInvariants> complement_invariants(const FormInvariants& v, const FormInvariants& u) {
  if (u.r > v.r || u.s > v.s) return std::nullopt;
  FormInvariants c;
  c.dim = v.dim - u.dim;
  c.r = v.r - u.r;
  c.s = v.s - u.s;
  c.det = v.det * u.det;
  // w(V) = w(U) + w(V') + (det U, det V').
  c.hasse = v.hasse + u.hasse + hilbert_support(u.det, c.det);
  return c;
}

SplitResult split_complement(const QuadraticForm& v, const QuadraticForm& u) {
  if (u.dim() > v.dim()) throw PreconditionError("subform has larger dimension than the ambient form");
  SplitResult out;
  out.required = complement_invariants(invariants(v), invariants(u));
  if (!out.required) {
    out.violation = "signature";
    return out;
  }
  try {
    check_admissible(*out.required);
  } catch (const AdmissibilityError& e) {
    out.violation = e.condition();
    return out;
  }
  out.complement = form_from_invariants(*out.required);
  return out;
}

}  // namespace tf::qf
