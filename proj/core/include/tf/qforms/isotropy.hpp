#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tf/qforms/classify.hpp"

namespace tf::qf {

struct IsotropyOptions {
  /// Largest absolute coordinate tried in the witness search.
  long height = 50;
  /// Maximum number of candidate vectors examined.
  std::uint64_t work = 2'000'000;
};

struct IsotropyVerdict {
  bool represents_zero = false;
  /// Integer isotropic vector in the coordinates of the diagonal
  /// presentation of the form, when the search found one.
  std::optional<std::vector<Integer>> witness;
  /// A place where the form is anisotropic, for "no" verdicts.
  std::optional<Place> obstruction;
};

/// Whether f is isotropic over Q_v.
bool is_locally_isotropic(const FormInvariants& f, const Place& v);
bool is_locally_isotropic(const QuadraticForm& f, const Place& v);

/// Hasse-Minkowski decision. The verdict depends only on the invariants; a
/// witness is attached when the bounded search finds one. Obstructions are
/// reported in the order: real place, odd primes ascending, then 2.
IsotropyVerdict represents_zero(const QuadraticForm& f, const IsotropyOptions& options = {});

}  // namespace tf::qf
