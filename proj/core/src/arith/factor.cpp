#include "tf/arith/factor.hpp"

#include <algorithm>
#include <mutex>

#include "tf/errors.hpp"

namespace tf::arith {

namespace {

std::mutex budget_mutex;
FactorBudget current_budget;

bool miller_rabin_round(const Integer& n, const Integer& d, unsigned s, unsigned long base) {
  Integer a = base;
  if (a % n == 0) return true;
  Integer x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  Integer n_minus_1 = n - 1;
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
  }
  return false;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor or 0 when the
// iteration allowance runs out.
Integer pollard_brent(const Integer& n, std::uint64_t& allowance) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1; allowance > 0; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    std::uint64_t r = 1;
    const std::uint64_t m = 128;
    auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
    while (g == 1 && allowance > 0) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      while (k < r && g == 1 && allowance > 0) {
        ys = y;
        std::uint64_t steps = std::min(m, r - k);
        for (std::uint64_t i = 0; i < steps; ++i) {
          y = f(y);
          Integer diff = abs(x - y);
          q = (q * diff) % n;
        }
        allowance = allowance > steps ? allowance - steps : 0;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += steps;
      }
      r *= 2;
    }
    if (g == n) {
      // Backtrack one step at a time.
      do {
        ys = f(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

void split_into(const Integer& n, std::vector<Integer>& primes, std::uint64_t& allowance) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t()) != 0) {
    Integer root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    split_into(root, primes, allowance);
    split_into(root, primes, allowance);
    return;
  }
  Integer d = pollard_brent(n, allowance);
  if (d == 0) {
    throw BudgetExceeded("factorization exceeded budget for a " +
                         std::to_string(mpz_sizeinbase(n.get_mpz_t(), 10)) + "-digit cofactor");
  }
  split_into(d, primes, allowance);
  split_into(Integer(n / d), primes, allowance);
}

}  // namespace

FactorBudget factor_budget() {
  std::lock_guard lock(budget_mutex);
  return current_budget;
}

void set_factor_budget(const FactorBudget& budget) {
  std::lock_guard lock(budget_mutex);
  current_budget = budget;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  static constexpr unsigned long kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned long p : kSmall) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  // 3317044064679887385961981 is the least strong pseudoprime to all 13 bases.
  static const Integer kDeterministicBound("3317044064679887385961981", 10);
  if (n >= kDeterministicBound) return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
  Integer d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (unsigned long base : kSmall) {
    if (!miller_rabin_round(n, d, s, base)) return false;
  }
  return true;
}

std::vector<std::pair<Integer, unsigned>> factor(const Integer& n) {
  if (n == 0) throw PreconditionError("cannot factor zero");
  const FactorBudget budget = factor_budget();
  Integer rest = abs(n);
  std::vector<Integer> primes;
  for (unsigned long p = 2; p <= budget.trial_division_limit; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      primes.emplace_back(p);
      rest /= p;
    }
  }
  if (rest != 1) {
    std::uint64_t allowance = budget.rho_iterations;
    split_into(rest, primes, allowance);
  }
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Integer, unsigned>> out;
  for (const Integer& p : primes) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1u);
    }
  }
  return out;
}

std::vector<Integer> prime_divisors(const Integer& n) {
  std::vector<Integer> out;
  for (auto& [p, e] : factor(n)) out.push_back(p);
  return out;
}

unsigned valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw PreconditionError("valuation of zero");
  Integer rest;
  return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

}  // namespace tf::arith
