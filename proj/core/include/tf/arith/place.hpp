#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "tf/arith/rational.hpp"

namespace tf::arith {

/// A place of Q: a prime p, or the real place. Primes sort ascending and the
/// real place sorts last.
class Place {
 public:
  static Place infinity() { return Place(); }
  /// Throws PreconditionError unless p is prime.
  static Place prime(const Integer& p);
  static Place prime(unsigned long p) { return prime(Integer(p)); }

  bool is_infinite() const { return p_ == 0; }
  const Integer& p() const { return p_; }

  /// "inf" or the decimal prime.
  std::string to_string() const;
  /// Inverse of to_string; also accepts "oo" and "infinity".
  static Place parse(std::string_view text);

  friend bool operator==(const Place& a, const Place& b) { return a.p_ == b.p_; }
  friend std::strong_ordering operator<=>(const Place& a, const Place& b);

 private:
  Place() = default;
  Integer p_ = 0;
};

/// Support of an element of Br_2(Q): the finite set of places where it is
/// nontrivial. Kept sorted. Even cardinality holds for genuine global
/// classes but is not enforced, so that invariant validators can report it.
class BrauerSupport {
 public:
  BrauerSupport() = default;
  BrauerSupport(std::initializer_list<Place> places);
  explicit BrauerSupport(std::vector<Place> places);

  bool contains(const Place& v) const;
  /// Adds v if absent, removes it if present (addition in Br_2).
  void toggle(const Place& v);
  void set(const Place& v, bool bit);

  const std::vector<Place>& places() const { return places_; }
  std::size_t size() const { return places_.size(); }
  bool empty() const { return places_.empty(); }
  bool is_even() const { return places_.size() % 2 == 0; }

  BrauerSupport operator+(const BrauerSupport& other) const;
  BrauerSupport& operator+=(const BrauerSupport& other) { return *this = *this + other; }

  friend bool operator==(const BrauerSupport&, const BrauerSupport&) = default;

  std::string to_string() const;

 private:
  std::vector<Place> places_;
};

}  // namespace tf::arith
