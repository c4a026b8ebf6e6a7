#pragma once
#include <optional>
#include <string>
#include <vector>

#include "tf/k3hk/ambient.hpp"
#include "tf/transfer/feasibility.hpp"

namespace tf::k3 {

using nf::NumberField;
using tr::Mode;
using tr::TransferVerdict;

struct RealizabilityReport {
  bool feasible = false;
  /// m - 2 (RM) or m - 1 (CM); absent when infeasible.
  std::optional<int> family_dimension;
  /// CM with m = 1: isolated members, countably many.
  bool countable = false;
  int pic_rank = 0;
  Mode mode = Mode::RM;
  std::string hodge_group_label;
  /// The criterion that decided the report, e.g. "rm-dimension".
  std::string criterion;
  std::vector<std::string> notes;
  std::optional<TransferVerdict> verdict;
};

/// Whether some K3 surface has transcendental part T(W) with W of dimension
/// m over E. RM needs m >= 3 and md <= 21, CM needs md <= 20.
RealizabilityReport k3_realizable(const NumberField& E, int m, Mode mode);

/// The same for the family with second Betti number r: RM needs m >= 3 and
/// md <= r - 1, CM needs md <= r - 1.
RealizabilityReport hk_realizable(Family family, std::optional<long> n, const NumberField& E, int m, Mode mode);

/// Whether a K3 surface with Picard lattice L (Gram matrix, signature
/// (1, rank - 1), rank + md = 22, primitively embeddable in the K3 lattice
/// by assumption) can have its transcendental part of the form T(W).
TransferVerdict picard_compatible(const Matrix& L, const NumberField& E, int m, Mode mode,
                                  const std::optional<arith::Polynomial>& witness = std::nullopt);

enum class Elliptic { Yes, No, Undetermined };
std::string to_string(Elliptic e);

/// K3 surface with CM by E (m = dim_E T, or Picard rank rho), or an explicit
/// Picard form.
struct EllipticContext {
  std::optional<NumberField> field;
  std::optional<int> m;
  std::optional<int> rho;
  std::optional<Matrix> picard;
};

Elliptic elliptic_fibration_verdict(const EllipticContext& context);

/// "Res_{E/Q} SO(W), m=3" for totally real E, "Res_{E/Q} U(W), m=10" for CM.
std::string hodge_group_label(const NumberField& E, int m);

/// A named case from the literature with its expected outcome.
struct NamedExample {
  std::string key;
  std::string description;
  /// "elliptic" or "picard".
  std::string kind;
  NumberField field;
  int m = 0;
  Mode mode = Mode::CM;
  std::optional<Matrix> picard;
  /// "yes"/"no" for elliptic cases, "feasible"/"infeasible" for Picard cases.
  std::string expected;
};

const std::vector<NamedExample>& famous_examples();
/// Throws PreconditionError for unknown keys.
const NamedExample& famous_example(const std::string& key);
/// Recomputes the outcome of a named case in the vocabulary of `expected`.
std::string evaluate_example(const NamedExample& example);

}  // namespace tf::k3
