#pragma once
#include <optional>
#include <string>
#include <vector>

#include "tf/transfer/transfer.hpp"

namespace tf::tr {

enum class Status { Feasible, Infeasible, NeedsWitness };
std::string to_string(Status s);

struct Obstruction {
  /// Name of the violated condition, e.g. "determinant" or "norm".
  std::string condition;
  std::optional<Place> place;
  std::string detail;
};

struct Certificate {
  /// A diagonal W realizing the transfer, when one was constructed.
  std::optional<std::vector<QuadFieldElement>> W;
  /// Invariants of the transfer part U.
  std::optional<FormInvariants> transfer;
  /// Invariants of the complement V' and a representative.
  std::optional<FormInvariants> complement;
  std::optional<QuadraticForm> complement_form;
  /// V' is determined by (V, E, m) alone.
  bool complement_forced = false;
  /// Infinitely many non-isomorphic transfer parts exist.
  bool infinitely_many = false;
};

struct TransferVerdict {
  Status status = Status::Feasible;
  /// The criterion that decided the verdict, e.g. "cm-realization".
  std::string criterion;
  std::optional<Certificate> certificate;
  std::optional<Obstruction> obstruction;
  std::vector<std::string> notes;

  bool feasible() const { return status == Status::Feasible; }
};

/// S_E membership with one refinement: a prime where disc(E) is not a
/// local square cannot split, so Unknown becomes Out there.
nf::SplitStatus split_status(const NumberField& E, const Integer& p);

/// Whether U is the transfer of a hermitian form over the CM field E.
/// Checks, in order: dimension, even signature, determinant, and local
/// hyperbolicity at the primes of S_E among 2, the primes of the entries of
/// U and the primes of disc(E). Outside that set hyperbolicity follows from
/// the determinant condition.
TransferVerdict cm_transfer_feasible(const NumberField& E, const QuadraticForm& U);

/// Whether U of signature (2, md-2) is the transfer of a quadratic form W
/// over the totally real E having one embedding of signature (2, m-2) and
/// the others negative definite. Odd degree: always. Even degree: iff
/// det(U) disc^m is the norm class of a totally positive element.
/// `witness` is such an element, as a polynomial in the generator.
TransferVerdict rm_transfer_feasible(const NumberField& E, const QuadraticForm& U,
                                     const std::optional<Polynomial>& witness = std::nullopt);

enum class Mode { RM, CM };
std::string to_string(Mode m);
Mode parse_mode(const std::string& text);

/// Whether V = T(W) + V' for some W over E of dimension m with T(W) of
/// signature (2, md-2) satisfying condition (C). With `complement` given,
/// decides for that V' only.
TransferVerdict split_transfer_feasible(const QuadraticForm& V, const NumberField& E, int m, Mode mode,
                                        const std::optional<QuadraticForm>& complement = std::nullopt);

/// For a claimed complement <a, c a disc> with c in {1, 3}: the symbol
/// condition (u, v a)_p = 0 at every prime of S_E where it can fail.
/// Used for the ambients H^3 + <-1,-1> (u = -1, v = -1) and
/// H^3 + I16 + <-2,-6> (u = -3, v = -2).
TransferVerdict validate_complement_symbol(const NumberField& E, const Rational& a, const SquareClass& u,
                                           const SquareClass& v);

}  // namespace tf::tr
