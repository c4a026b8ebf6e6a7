#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tf/numfields/field.hpp"
#include "tf/qforms/classify.hpp"

namespace tf::tr {

using arith::Integer;
using arith::Place;
using arith::Polynomial;
using arith::Rational;
using arith::SquareClass;
using nf::NumberField;
using qf::FormInvariants;
using qf::QuadraticForm;

/// a + b sqrt(d) in Q(sqrt d); d is carried by the caller.
struct QuadFieldElement {
  Rational a;
  Rational b;

  bool is_zero() const { return a == 0 && b == 0; }
  QuadFieldElement conjugate() const { return {a, -b}; }
  Rational norm(const Integer& d) const { return a * a - Rational(d) * b * b; }
  /// Sign at the embedding sqrt d -> +sqrt d (or -sqrt d when `conjugate`).
  int sign(const Integer& d, bool conjugate = false) const;
  std::string to_string() const;
  friend bool operator==(const QuadFieldElement&, const QuadFieldElement&) = default;
};

/// T(W) for the diagonal quadratic form W = <alpha_1, ...> over Q(sqrt d).
/// Each alpha = a + b sqrt d contributes the Gram block
/// [[2a, 2bd], [2bd, 2ad]] in the basis {1, sqrt d}.
QuadraticForm transfer_quadratic(const Integer& d, const std::vector<QuadFieldElement>& W);

/// T(W) for the diagonal hermitian form W = <l_1, ...>, l_i in Q, over
/// Q(sqrt -D). Each entry contributes <2 l, 2 l D>.
QuadraticForm transfer_hermitian_imagquad(const Integer& D, const std::vector<Rational>& W);

/// Dimension and determinant class a transfer must have.
struct PredictedInvariants {
  int dim = 0;
  /// Unknown for totally real fields when the norm class of det W is not given.
  std::optional<SquareClass> det;
};

/// For totally real E, `norm_det_w` is the class of N(det W).
PredictedInvariants predicted_invariants(const NumberField& E, int m,
                                         const std::optional<SquareClass>& norm_det_w = std::nullopt);

/// Determinant class of every transfer of an m-dimensional hermitian form
/// over the CM field E: [(-1)^{d0} disc]^m.
SquareClass cm_transfer_det(const NumberField& E, int m);

/// Per-embedding signatures of W. Totally real fields have one entry per
/// real embedding; CM fields one per conjugate pair, already doubled so that
/// the entries sum to the signature of T(W).
struct SignatureProfile {
  std::vector<std::pair<int, int>> per_embedding;
  std::pair<int, int> total() const;
};

struct ConditionC {
  SignatureProfile profile;
  bool holds = false;
};

/// Whether exactly one embedding (conjugate pair for CM) carries a positive
/// part of two (resp. the pair signature (2, 2m-2)) while all others are
/// negative definite. Totally real fields also need m >= 3.
bool satisfies_condition_C(const SignatureProfile& profile, bool cm, int m);

/// Real quadratic field Q(sqrt d).
ConditionC condition_C_profile(const Integer& d, const std::vector<QuadFieldElement>& W);
/// Imaginary quadratic field, entries in Q.
ConditionC condition_C_profile_hermitian(const std::vector<Rational>& W);
/// General field: entries are polynomials in the generator of E (totally
/// real) or of E0 (CM).
ConditionC condition_C_profile(const NumberField& E, const std::vector<Polynomial>& W);

struct WitnessSearchOptions {
  /// Largest |a|, |b| of candidate entries a + b sqrt d.
  long height = 6;
  /// Maximum number of candidate entries examined.
  std::uint64_t work = 200'000;
};

struct WitnessSearchResult {
  std::optional<std::vector<QuadFieldElement>> W;
  /// Set when det(U) d^m is not a norm: a place where the norm symbol fails.
  std::optional<Place> obstruction;
  /// True when the search stopped on the work limit.
  bool exhausted = false;
  explicit operator bool() const { return W.has_value(); }
};

/// Searches a diagonal W over Q(sqrt d) with T(W) isomorphic to U. A found
/// W is re-verified before it is returned.
WitnessSearchResult construct_witness_quadratic(const QuadraticForm& U, const Integer& d,
                                                const WitnessSearchOptions& options = {});

}  // namespace tf::tr
