#include "tf/qforms/isotropy.hpp"

#include <algorithm>

#include "tf/arith/hilbert.hpp"

namespace tf::qf {

using arith::hilbert_symbol;
using arith::is_local_square;

namespace {

const SquareClass kMinusOne = SquareClass::from_squarefree(-1);

// Searches for x with sum a_i x_i^2 = 0, trying supports of growing size and
// solving for the last coordinate.
std::optional<std::vector<Integer>> search_witness(const std::vector<SquareClass>& a,
                                                   const IsotropyOptions& opt) {
  const std::size_t n = a.size();
  std::uint64_t work = 0;
  // Opposite entries give the quickest witness.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a[i].value() == -a[j].value()) {
        std::vector<Integer> x(n, Integer(0));
        x[i] = x[j] = 1;
        return x;
      }
    }
  }
  for (std::size_t k = 2; k <= std::min<std::size_t>(n, 5); ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      // Free coordinates idx[0..k-2] in [-h, h] with idx[0] in [1, h];
      // solve a_last * y^2 = -sum for y.
      const Integer& last = a[idx[k - 1]].value();
      for (long h = 1; h <= opt.height; ++h) {
        // Enumerate vectors of max-norm exactly h, first coordinate positive.
        std::vector<long> cur(k - 1, -h);
        cur[0] = 1;
        while (true) {
          if (++work > opt.work) return std::nullopt;
          long mx = 0;
          for (long c : cur) mx = std::max(mx, std::labs(c));
          bool all_nonzero = std::none_of(cur.begin(), cur.end(), [](long c) { return c == 0; });
          if (mx == h && all_nonzero) {
            Integer sum = 0;
            for (std::size_t i = 0; i + 1 < k; ++i) sum += a[idx[i]].value() * cur[i] * cur[i];
            Integer rhs = -sum;
            if (mpz_divisible_p(rhs.get_mpz_t(), last.get_mpz_t()) != 0) {
              Integer y2 = rhs / last;
              if (y2 > 0 && mpz_perfect_square_p(y2.get_mpz_t()) != 0) {
                Integer y;
                mpz_sqrt(y.get_mpz_t(), y2.get_mpz_t());
                std::vector<Integer> w(n, Integer(0));
                for (std::size_t i = 0; i + 1 < k; ++i) w[idx[i]] = cur[i];
                w[idx[k - 1]] = y;
                return w;
              }
            }
          }
          std::size_t i = k - 2;
          while (true) {
            const long lo = (i == 0) ? 1 : -h;
            if (cur[i] < h) {
              ++cur[i];
              break;
            }
            cur[i] = lo;
            if (i == 0) goto next_height;
            --i;
          }
        }
      next_height:;
      }
      // Next k-subset of indices.
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_locally_isotropic(const FormInvariants& f, const Place& v) {
  if (v.is_infinite()) return f.r > 0 && f.s > 0;
  switch (f.dim) {
    case 0:
    case 1:
      return false;
    case 2:
      return is_local_square(f.det * kMinusOne, v);
    case 3:
      return hasse_bit(f, v) == hilbert_symbol(kMinusOne, f.det * kMinusOne, v);
    case 4:
      return !(is_local_square(f.det, v) && hasse_bit(f, v) != hilbert_symbol(kMinusOne, kMinusOne, v));
    default:
      return true;
  }
}

bool is_locally_isotropic(const QuadraticForm& f, const Place& v) {
  return is_locally_isotropic(invariants(f), v);
}

IsotropyVerdict represents_zero(const QuadraticForm& f, const IsotropyOptions& options) {
  IsotropyVerdict out;
  const FormInvariants inv = invariants(f);
  std::vector<Place> order{Place::infinity()};
  std::vector<Place> finite = arith::bad_primes(f.entries());
  for (const Place& v : finite) {
    if (v.p() != 2) order.push_back(v);
  }
  order.push_back(Place::prime(2));
  for (const Place& v : order) {
    if (!is_locally_isotropic(inv, v)) {
      out.obstruction = v;
      return out;
    }
  }
  out.represents_zero = true;
  out.witness = search_witness(f.entries(), options);
  return out;
}

}  // namespace tf::qf
