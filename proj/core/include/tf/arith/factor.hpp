#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tf/arith/rational.hpp"

namespace tf::arith {

/// Work limits for integer factorization. A factorization that cannot be
/// completed inside these limits raises BudgetExceeded instead of guessing.
struct FactorBudget {
  std::uint64_t trial_division_limit = 1u << 16;
  std::uint64_t rho_iterations = 2'000'000;
};

/// Process-wide default budget used by every operation that factors.
FactorBudget factor_budget();
void set_factor_budget(const FactorBudget& budget);

/// Deterministic for n < 3.3e24 (Miller-Rabin on the first 13 prime bases);
/// above that GMP's BPSW-based test is used.
bool is_prime(const Integer& n);

/// Prime factorization of |n| (n != 0) as ascending (prime, exponent) pairs.
std::vector<std::pair<Integer, unsigned>> factor(const Integer& n);

/// Distinct primes dividing |n|, ascending.
std::vector<Integer> prime_divisors(const Integer& n);

/// p-adic valuation of a nonzero integer.
unsigned valuation(const Integer& n, const Integer& p);

}  // namespace tf::arith
