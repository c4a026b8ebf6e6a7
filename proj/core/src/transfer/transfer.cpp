#include "tf/transfer/transfer.hpp"

#include <map>
#include <numeric>
#include <set>

#include "tf/arith/hilbert.hpp"
#include "tf/arith/real_roots.hpp"
#include "tf/errors.hpp"
#include "tf/numfields/norms.hpp"

namespace tf::tr {

int QuadFieldElement::sign(const Integer& d, bool conj) const {
  const int sa = sgn(a);
  const int sb = conj ? -sgn(b) : sgn(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger of a^2 and d b^2 wins; they never tie.
  return a * a > Rational(d) * b * b ? sa : sb;
}

std::string QuadFieldElement::to_string() const {
  if (b == 0) return a.get_str();
  std::string out = a == 0 ? "" : a.get_str() + (b > 0 ? "+" : "");
  if (b == -1) return out + "-sqrt";
  if (b == 1) return out + "sqrt";
  return out + b.get_str() + "*sqrt";
}

QuadraticForm transfer_quadratic(const Integer& d, const std::vector<QuadFieldElement>& W) {
  if (d <= 1) throw PreconditionError("real quadratic transfer needs d > 1");
  std::vector<qf::Matrix> blocks;
  const Rational dq(d);
  for (const auto& alpha : W) {
    if (alpha.is_zero()) throw PreconditionError("zero entry in a diagonal form");
    const Rational off = 2 * alpha.b * dq;
    blocks.push_back({{2 * alpha.a, off}, {off, 2 * alpha.a * dq}});
  }
  if (blocks.empty()) return QuadraticForm();
  return qf::diagonalize(qf::block_sum(blocks));
}

QuadraticForm transfer_hermitian_imagquad(const Integer& D, const std::vector<Rational>& W) {
  if (D <= 0) throw PreconditionError("imaginary quadratic transfer needs D > 0");
  std::vector<Rational> diag;
  for (const auto& l : W) {
    if (l == 0) throw PreconditionError("zero entry in a diagonal form");
    diag.push_back(2 * l);
    diag.push_back(2 * l * Rational(D));
  }
  return QuadraticForm::diagonal(diag);
}

SquareClass cm_transfer_det(const NumberField& E, int m) {
  if (!E.is_cm()) throw PreconditionError("hermitian transfer needs a CM field");
  SquareClass base = E.disc_class();
  if (E.half_degree() % 2 != 0) base *= SquareClass::from_squarefree(-1);
  return arith::power(base, static_cast<unsigned long>(m));
}

PredictedInvariants predicted_invariants(const NumberField& E, int m, const std::optional<SquareClass>& norm_det_w) {
  if (m < 1) throw PreconditionError("dimension over E must be >= 1");
  PredictedInvariants out;
  out.dim = m * E.degree();
  if (E.is_cm()) {
    out.det = cm_transfer_det(E, m);
  } else if (norm_det_w) {
    out.det = arith::power(E.disc_class(), static_cast<unsigned long>(m)) * *norm_det_w;
  }
  return out;
}

std::pair<int, int> SignatureProfile::total() const {
  std::pair<int, int> t{0, 0};
  for (const auto& [r, s] : per_embedding) {
    t.first += r;
    t.second += s;
  }
  return t;
}

bool satisfies_condition_C(const SignatureProfile& profile, bool cm, int m) {
  if (!cm && m < 3) return false;
  const int top = 2;
  int special = 0;
  for (const auto& [r, s] : profile.per_embedding) {
    if (r == top) {
      ++special;
    } else if (r != 0) {
      return false;
    }
  }
  return special == 1;
}

namespace {

ConditionC finish(SignatureProfile profile, bool cm, int m) {
  ConditionC out;
  out.holds = satisfies_condition_C(profile, cm, m);
  out.profile = std::move(profile);
  return out;
}

std::pair<int, int> count_signs(const std::vector<int>& signs, int scale) {
  std::pair<int, int> rs{0, 0};
  for (int s : signs) (s > 0 ? rs.first : rs.second) += scale;
  return rs;
}

}  // namespace

ConditionC condition_C_profile(const Integer& d, const std::vector<QuadFieldElement>& W) {
  if (d <= 1) throw PreconditionError("real quadratic profile needs d > 1");
  std::vector<int> sigma, tau;
  for (const auto& alpha : W) {
    if (alpha.is_zero()) throw PreconditionError("zero entry in a diagonal form");
    sigma.push_back(alpha.sign(d, false));
    tau.push_back(alpha.sign(d, true));
  }
  SignatureProfile p;
  p.per_embedding = {count_signs(sigma, 1), count_signs(tau, 1)};
  return finish(std::move(p), false, static_cast<int>(W.size()));
}

ConditionC condition_C_profile_hermitian(const std::vector<Rational>& W) {
  std::vector<int> signs;
  for (const auto& l : W) {
    if (l == 0) throw PreconditionError("zero entry in a diagonal form");
    signs.push_back(sgn(l));
  }
  SignatureProfile p;
  p.per_embedding = {count_signs(signs, 2)};
  return finish(std::move(p), true, static_cast<int>(W.size()));
}

ConditionC condition_C_profile(const NumberField& E, const std::vector<Polynomial>& W) {
  const bool cm = E.is_cm();
  const Polynomial& f = E.minpoly();
  const int roots = E.half_degree();
  if (f.degree() != roots && !(f.degree() <= 0 && roots == 1)) {
    throw PreconditionError("field " + E.name() + " has no explicit defining polynomial for embeddings");
  }
  std::vector<std::vector<int>> signs(static_cast<std::size_t>(roots));
  for (const auto& entry : W) {
    if (entry.is_zero()) throw PreconditionError("zero entry in a diagonal form");
    std::vector<int> at;
    if (roots == 1 && f.degree() <= 0) {
      at = {sgn(entry.leading())};
    } else {
      if (entry.degree() >= f.degree()) throw PreconditionError("entry degree must be below the field degree");
      at = arith::signs_at_real_roots(f, entry);
    }
    for (std::size_t i = 0; i < at.size(); ++i) signs[i].push_back(at[i]);
  }
  SignatureProfile p;
  for (const auto& s : signs) p.per_embedding.push_back(count_signs(s, cm ? 2 : 1));
  return finish(std::move(p), cm, static_cast<int>(W.size()));
}

namespace {

// Places of a norm-symbol failure, most informative first: the real place,
// odd primes ascending, then 2.
std::optional<Place> first_failure(const arith::BrauerSupport& support) {
  if (support.empty()) return std::nullopt;
  if (support.contains(Place::infinity())) return Place::infinity();
  for (const auto& v : support.places()) {
    if (!v.is_infinite() && v.p() != 2) return v;
  }
  return support.places().front();
}

struct Candidate {
  QuadFieldElement alpha;
  FormInvariants inv;
};

class WitnessSearch {
 public:
  WitnessSearch(std::vector<Candidate> candidates, std::uint64_t work)
      : candidates_(std::move(candidates)), work_(work) {}

  bool solve(const FormInvariants& target, int k, std::vector<QuadFieldElement>& out) {
    const std::string key = std::to_string(k) + ":" + target.to_string();
    if (failed_.count(key) != 0) return false;
    for (const auto& c : candidates_) {
      if (exhausted_) return false;
      if (++used_ > work_) {
        exhausted_ = true;
        return false;
      }
      if (k == 1) {
        if (c.inv == target) {
          out.push_back(c.alpha);
          return true;
        }
        continue;
      }
      auto rest = qf::complement_invariants(target, c.inv);
      if (!rest || !qf::is_admissible(*rest)) continue;
      out.push_back(c.alpha);
      if (solve(*rest, k - 1, out)) return true;
      out.pop_back();
    }
    if (!exhausted_) failed_.insert(key);
    return false;
  }

  bool exhausted() const { return exhausted_; }

 private:
  std::vector<Candidate> candidates_;
  std::uint64_t work_;
  std::uint64_t used_ = 0;
  bool exhausted_ = false;
  std::set<std::string> failed_;
};

bool squarefree_gcd(long a, long b) {
  const long g = std::gcd(a, b);
  for (long q = 2; q * q <= g; ++q) {
    if (g % (q * q) == 0) return false;
  }
  return true;
}

}  // namespace

WitnessSearchResult construct_witness_quadratic(const QuadraticForm& U, const Integer& d,
                                                const WitnessSearchOptions& options) {
  if (U.dim() % 2 != 0) throw PreconditionError("transfer from a quadratic field has even dimension");
  if (d <= 1) throw PreconditionError("real quadratic witness search needs d > 1");
  const int m = U.dim() / 2;
  WitnessSearchResult result;
  if (m == 0) {
    result.W = std::vector<QuadFieldElement>{};
    return result;
  }
  const SquareClass target = U.det() * arith::power(SquareClass::from_squarefree(d), static_cast<unsigned long>(m));
  if (!nf::is_norm_quadratic(d, target.value())) {
    result.obstruction = first_failure(arith::hilbert_support(target, SquareClass::from_squarefree(d)));
    return result;
  }

  // One entry per distinct transfer class, smallest height first.
  std::vector<Candidate> candidates;
  std::set<std::string> seen;
  for (long h = 1; h <= options.height; ++h) {
    for (long a = -h; a <= h; ++a) {
      for (long b = -h; b <= h; ++b) {
        if (std::max(std::labs(a), std::labs(b)) != h || !squarefree_gcd(a, b)) continue;
        QuadFieldElement alpha{Rational(a), Rational(b)};
        FormInvariants inv = qf::invariants(transfer_quadratic(d, {alpha}));
        if (seen.insert(inv.to_string()).second) candidates.push_back({alpha, inv});
      }
    }
  }

  WitnessSearch search(std::move(candidates), options.work);
  std::vector<QuadFieldElement> W;
  if (search.solve(qf::invariants(U), m, W)) {
    if (!qf::is_isomorphic(transfer_quadratic(d, W), U)) throw Error("witness search produced an invalid transfer");
    result.W = std::move(W);
  } else {
    result.exhausted = search.exhausted();
  }
  return result;
}

}  // namespace tf::tr
