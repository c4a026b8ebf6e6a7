#include "tf/qforms/witt.hpp"

#include "tf/arith/hilbert.hpp"

namespace tf::qf {

using arith::hilbert_support;

namespace {

const SquareClass kMinusOne = SquareClass::from_squarefree(-1);

BrauerSupport normalize(const BrauerSupport& w, const SquareClass& det, int dim) {
  const int j = dim / 2;
  BrauerSupport out = w;
  if (j % 2 == 1) out += hilbert_support(det, kMinusOne);
  if ((j * (j + 1) / 2) % 2 == 1) out += hilbert_support(kMinusOne, kMinusOne);
  return out;
}

SquareClass disc_of(const SquareClass& det, int dim) {
  return ((dim * (dim - 1) / 2) % 2 == 1) ? det * kMinusOne : det;
}

}  // namespace

std::string WittClass::to_string() const {
  return "(parity " + std::to_string(dim_parity) + ", disc " + disc.to_string() + ", signature " +
         std::to_string(signature) + ", hasse " + hasse.to_string() + ")";
}

SquareClass discriminant(const FormInvariants& inv) { return disc_of(inv.det, inv.dim); }

WittClass witt_class(const FormInvariants& inv) {
  WittClass c;
  c.dim_parity = inv.dim % 2;
  c.disc = discriminant(inv);
  c.signature = inv.r - inv.s;
  c.hasse = normalize(inv.hasse, inv.det, inv.dim);
  return c;
}

WittClass witt_reduce(const QuadraticForm& f) { return witt_class(invariants(f)); }

WittClass witt_add(const WittClass& a, const WittClass& b) {
  // Work with formal representatives of dimension 0 or 1, where det = disc
  // and the normalized Hasse support is the plain one.
  const int n = a.dim_parity + b.dim_parity;
  const SquareClass det = a.disc * b.disc;
  const BrauerSupport w = a.hasse + b.hasse + hilbert_support(a.disc, b.disc);
  WittClass c;
  c.dim_parity = n % 2;
  c.disc = disc_of(det, n);
  c.signature = a.signature + b.signature;
  c.hasse = normalize(w, det, n);
  return c;
}

}  // namespace tf::qf
