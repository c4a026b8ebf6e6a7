#pragma once
#include <optional>
#include <string>

#include "tf/qforms/form.hpp"

namespace tf::k3 {

using qf::Matrix;
using qf::QuadraticForm;

/// K3 surfaces and the four known families of higher-dimensional
/// hyperkaehler manifolds.
enum class Family { K3, Kummer, OG6, HilbK3, OG10 };
std::string to_string(Family f);
/// Accepts "K3", "Kummer", "OG6", "HilbK3", "OG10" (case-insensitive).
Family parse_family(const std::string& text);

/// Second cohomology of a family with its intersection form.
struct AmbientSpace {
  Family family = Family::K3;
  /// Half the complex dimension for Kummer and HilbK3 types.
  std::optional<long> n;
  int b2 = 0;
  /// The integral lattice, e.g. "H^3 + E8^2 + <-2>".
  std::string integral_label;
  /// Its rationalization in canonical diagonal shape, e.g. "H^3 + I16 + <-2>".
  std::string rational_label;
  Matrix integral_gram;
  QuadraticForm rational_form;
  /// k with the last summand <-2k> for Kummer and HilbK3 types.
  std::optional<long> k;
};

/// Throws PreconditionError when n is missing or below 2 for Kummer and
/// HilbK3 types.
AmbientSpace ambient(Family family, std::optional<long> n = std::nullopt);

}  // namespace tf::k3
