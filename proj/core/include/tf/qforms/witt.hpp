#pragma once

#include <string>

#include "tf/qforms/classify.hpp"

namespace tf::qf {

/// Class in the Witt group W(Q). Two forms have the same class iff they
/// agree after adding hyperbolic planes.
///
/// `hasse` is the normalized Hasse support
///   w(V) + j (det V, -1) + [j(j+1)/2 odd] (-1, -1),   j = floor(dim/2),
/// which is unchanged by V -> V + H. Together with the dimension parity,
/// discriminant and signature it classifies Witt classes.
struct WittClass {
  int dim_parity = 0;
  SquareClass disc;
  int signature = 0;
  BrauerSupport hasse;

  /// Torsion iff the signature vanishes (Q has one real place).
  bool torsion() const { return signature == 0; }
  bool is_zero() const { return dim_parity == 0 && disc.is_square() && signature == 0 && hasse.empty(); }

  friend bool operator==(const WittClass&, const WittClass&) = default;
  std::string to_string() const;
};

WittClass witt_reduce(const QuadraticForm& f);
WittClass witt_class(const FormInvariants& inv);
WittClass witt_add(const WittClass& a, const WittClass& b);

/// (-1)^{n(n-1)/2} det.
SquareClass discriminant(const FormInvariants& inv);

}  // namespace tf::qf
