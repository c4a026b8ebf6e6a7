#pragma once

#include <compare>
#include <string>
#include <vector>

#include "tf/arith/rational.hpp"

namespace tf::arith {

/// An element of Q^x / Q^x^2, represented by its signed squarefree integer.
class SquareClass {
 public:
  SquareClass() : value_(1) {}

  /// Class of a nonzero rational. Factors numerator and denominator, so it
  /// may throw BudgetExceeded.
  explicit SquareClass(const Rational& r);

  /// Trusts that `squarefree` is already squarefree and nonzero.
  static SquareClass from_squarefree(Integer squarefree);

  const Integer& value() const { return value_; }
  int sign() const { return sgn(value_); }
  bool is_square() const { return value_ == 1; }

  /// Distinct primes dividing the representative.
  std::vector<Integer> primes() const;

  /// Product class. Uses only gcds: for squarefree a, b with g = gcd(a, b)
  /// the class of ab is (a/g)(b/g).
  SquareClass operator*(const SquareClass& other) const;
  SquareClass& operator*=(const SquareClass& other) { return *this = *this * other; }

  friend bool operator==(const SquareClass& a, const SquareClass& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const SquareClass& a, const SquareClass& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string to_string() const { return value_.get_str(); }

 private:
  Integer value_;
};

/// Canonical squarefree representative of r (r != 0).
SquareClass squarefree_class(const Rational& r);

/// Squarefree part of a nonzero integer, sign included.
Integer squarefree_part(const Integer& n);

/// Class of c^k.
SquareClass power(const SquareClass& c, unsigned long k);

}  // namespace tf::arith
