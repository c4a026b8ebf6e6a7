#pragma once

#include <optional>
#include <string>

#include "tf/qforms/form.hpp"

namespace tf::qf {

/// Complete isomorphism invariants of a rational quadratic form.
struct FormInvariants {
  int dim = 0;
  SquareClass det;
  int r = 0;  // positive part of the signature
  int s = 0;  // negative part of the signature
  BrauerSupport hasse;

  friend bool operator==(const FormInvariants&, const FormInvariants&) = default;
  std::string to_string() const;
};

FormInvariants invariants(const QuadraticForm& f);

/// Hasse invariant bit at v.
int hasse_bit(const FormInvariants& inv, const Place& v);

/// Invariants of the orthogonal sum, computed from the summands' invariants.
FormInvariants sum_invariants(const FormInvariants& a, const FormInvariants& b);

bool is_isomorphic(const QuadraticForm& f, const QuadraticForm& g);

/// Isomorphism over Q_v (over R when v is the real place).
bool is_locally_isomorphic(const FormInvariants& f, const FormInvariants& g, const Place& v);
bool is_locally_isomorphic(const QuadraticForm& f, const QuadraticForm& g, const Place& v);

/// True when f is isomorphic over Q_v to a sum of hyperbolic planes.
bool is_locally_hyperbolic(const FormInvariants& f, const Place& v);
bool is_locally_hyperbolic(const QuadraticForm& f, const Place& v);

/// Throws AdmissibilityError naming the first violated condition when no
/// rational form has these invariants. Conditions are checked in the order
/// signature-dimension, condition-1 (det sign), condition-2 (real Hasse bit),
/// reciprocity, condition-3 (dimension 0, 1, 2 constraints).
void check_admissible(const FormInvariants& target);
bool is_admissible(const FormInvariants& target);

/// A diagonal form with exactly the given invariants. Deterministic.
QuadraticForm form_from_invariants(const FormInvariants& target);

struct SplitResult {
  std::optional<QuadraticForm> complement;
  /// The invariants V' would need; filled whenever the signature fits.
  std::optional<FormInvariants> required;
  /// Why no complement exists: "signature" or an admissibility condition.
  std::string violation;
  explicit operator bool() const { return complement.has_value(); }
};

/// Invariants V' must have so that V = U + V'; nullopt when the signature of
/// U does not fit into that of V.
std::optional<FormInvariants> complement_invariants(const FormInvariants& v, const FormInvariants& u);

/// Finds V' with V = U + V', or reports why none exists.
SplitResult split_complement(const QuadraticForm& v, const QuadraticForm& u);

}  // namespace tf::qf
