#include "tf/k3hk/ambient.hpp"

#include <algorithm>
#include <cctype>

#include "tf/errors.hpp"

namespace tf::k3 {

using arith::Rational;

std::string to_string(Family f) {
  switch (f) {
    case Family::K3: return "K3";
    case Family::Kummer: return "Kummer";
    case Family::OG6: return "OG6";
    case Family::HilbK3: return "HilbK3";
    case Family::OG10: return "OG10";
  }
  return "unknown";
}

Family parse_family(const std::string& text) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (Family f : {Family::K3, Family::Kummer, Family::OG6, Family::HilbK3, Family::OG10}) {
    std::string name = to_string(f);
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (t == name) return f;
  }
  throw PreconditionError("unknown family '" + text + "'");
}

namespace {

Matrix repeat_gram(const Matrix& g, int n) { return qf::block_sum(std::vector<Matrix>(static_cast<std::size_t>(n), g)); }

Matrix unimodular_part(bool with_e8) {
  std::vector<Matrix> blocks{repeat_gram(qf::hyperbolic_gram(), 3)};
  if (with_e8) blocks.push_back(repeat_gram(qf::negative_e8_gram(), 2));
  return qf::block_sum(blocks);
}

QuadraticForm rational_base(bool with_e8) {
  return with_e8 ? qf::direct_sum(qf::hyperbolic(3), qf::negative_unit(16)) : qf::hyperbolic(3);
}

}  // namespace

AmbientSpace ambient(Family family, std::optional<long> n) {
  AmbientSpace A;
  A.family = family;
  const bool needs_n = family == Family::Kummer || family == Family::HilbK3;
  if (needs_n) {
    if (!n) throw PreconditionError(to_string(family) + " type needs n");
    if (*n < 2) throw PreconditionError(to_string(family) + " type needs n >= 2");
    A.n = n;
  }
  switch (family) {
    case Family::K3:
      A.integral_label = "H^3 + E8^2";
      A.rational_label = "H^3 + I16";
      A.integral_gram = unimodular_part(true);
      A.rational_form = rational_base(true);
      break;
    case Family::Kummer: {
      A.k = *n + 1;
      const std::string last = "<" + std::to_string(-2 * *A.k) + ">";
      A.integral_label = "H^3 + " + last;
      A.rational_label = A.integral_label;
      A.integral_gram = qf::block_sum({unimodular_part(false), Matrix{{Rational(-2 * *A.k)}}});
      A.rational_form = qf::direct_sum(rational_base(false), QuadraticForm::diagonal({-2 * *A.k}));
      break;
    }
    case Family::OG6:
      A.integral_label = "H^3 + <-2,-2>";
      A.rational_label = "H^3 + <-1,-1>";
      A.integral_gram = qf::block_sum({unimodular_part(false), Matrix{{-2, 0}, {0, -2}}});
      A.rational_form = qf::direct_sum(rational_base(false), QuadraticForm::diagonal({-1, -1}));
      break;
    case Family::HilbK3: {
      A.k = *n - 1;
      const std::string last = "<" + std::to_string(-2 * *A.k) + ">";
      A.integral_label = "H^3 + E8^2 + " + last;
      A.rational_label = "H^3 + I16 + " + last;
      A.integral_gram = qf::block_sum({unimodular_part(true), Matrix{{Rational(-2 * *A.k)}}});
      A.rational_form = qf::direct_sum(rational_base(true), QuadraticForm::diagonal({-2 * *A.k}));
      break;
    }
    case Family::OG10:
      A.integral_label = "H^3 + E8^2 + A2";
      A.rational_label = "H^3 + I16 + <-2,-6>";
      A.integral_gram = qf::block_sum({unimodular_part(true), qf::negative_a2_gram()});
      A.rational_form = qf::direct_sum(rational_base(true), QuadraticForm::diagonal({-2, -6}));
      break;
  }
  A.b2 = A.rational_form.dim();
  return A;
}

}  // namespace tf::k3
