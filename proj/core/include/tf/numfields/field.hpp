#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tf/arith/polynomial.hpp"
#include "tf/arith/square_class.hpp"

namespace tf::nf {

using arith::Integer;
using arith::Polynomial;
using arith::Rational;
using arith::SquareClass;

enum class FieldKind { RealQuadratic, ImagQuadratic, Cyclotomic, GeneralTotallyReal, GeneralCM };

/// A totally real or CM number field. Construct through the factory
/// functions, which validate the data.
class NumberField {
 public:
  /// Q(sqrt d), d squarefree > 1.
  static NumberField real_quadratic(const Integer& d);
  /// Q(sqrt -D), D squarefree > 0.
  static NumberField imag_quadratic(const Integer& D);
  /// Q(zeta_n), n >= 3. For n = 2 mod 4 the field is Q(zeta_{n/2}); the
  /// given n is kept for display and `conductor()` returns n/2.
  static NumberField cyclotomic(long n);
  /// Totally real field Q[x]/(minpoly). The discriminant class is computed
  /// from the polynomial; a supplied class is checked against it.
  /// `witnesses` are candidate elements (polynomials in the generator) used
  /// to certify totally positive norms.
  static NumberField general_totally_real(const Polynomial& minpoly,
                                          const std::optional<SquareClass>& disc = std::nullopt,
                                          std::vector<Polynomial> witnesses = {});
  /// CM field E = E0(sqrt theta) over the totally real E0 = Q[x]/(real_minpoly).
  /// theta (a polynomial in the generator of E0, totally negative) fixes the
  /// discriminant class as that of N(theta); otherwise `disc` is required.
  /// `split_primes` records known answers p -> (p in S_E).
  static NumberField general_cm(const Polynomial& real_minpoly, const std::optional<Polynomial>& theta,
                                const std::optional<SquareClass>& disc,
                                std::map<Integer, bool> split_primes = {});

  FieldKind kind() const { return kind_; }
  bool is_cm() const { return kind_ == FieldKind::ImagQuadratic || kind_ == FieldKind::Cyclotomic || kind_ == FieldKind::GeneralCM; }
  bool is_totally_real() const { return !is_cm(); }

  int degree() const { return degree_; }
  /// Degree of the maximal totally real subfield (CM fields only).
  int half_degree() const { return is_cm() ? degree_ / 2 : degree_; }
  const SquareClass& disc_class() const { return disc_; }

  /// d for real quadratic, D for imaginary quadratic.
  const Integer& quadratic_parameter() const { return param_; }
  /// The n with Q(zeta_n) = E and n not 2 mod 4.
  long conductor() const { return n_; }
  /// The n the field was constructed with.
  long label() const { return label_n_; }
  /// Defining polynomial of a totally real field, or of E0 for a CM field
  /// given by a real subfield.
  const Polynomial& minpoly() const { return minpoly_; }
  const std::optional<Polynomial>& theta() const { return theta_; }
  const std::map<Integer, bool>& split_primes() const { return split_; }
  const std::vector<Polynomial>& witnesses() const { return witnesses_; }

  /// True for RealQuadratic and ImagQuadratic.
  bool is_quadratic() const { return kind_ == FieldKind::RealQuadratic || kind_ == FieldKind::ImagQuadratic; }

  /// Short ASCII name, e.g. "Q(sqrt5)", "Q(sqrt-1)", "Q(zeta44)".
  std::string name() const;

 private:
  FieldKind kind_ = FieldKind::RealQuadratic;
  int degree_ = 0;
  SquareClass disc_;
  Integer param_ = 0;
  long n_ = 0;
  long label_n_ = 0;
  Polynomial minpoly_;
  std::optional<Polynomial> theta_;
  std::map<Integer, bool> split_;
  std::vector<Polynomial> witnesses_;
};

struct FieldInvariants {
  int degree = 0;
  int half_degree = 0;
  SquareClass disc_class;
  bool is_cm = false;
};

FieldInvariants field_invariants(const NumberField& E);

long euler_phi(long n);

/// Square class of the discriminant of Q(zeta_n).
SquareClass cyclotomic_disc_class(long n);

enum class SplitStatus { In, Out, Unknown };

std::string to_string(SplitStatus s);

/// Whether p lies in S_E, the primes where E (x) Q_p is two copies of
/// E0 (x) Q_p. Cyclotomic primes dividing n are Unknown.
/// Throws PreconditionError for totally real fields.
SplitStatus in_SE(const NumberField& E, const Integer& p);

}  // namespace tf::nf
