#include "tf/arith/place.hpp"

#include <algorithm>

#include "tf/arith/factor.hpp"
#include "tf/errors.hpp"

namespace tf::arith {

Place Place::prime(const Integer& p) {
  if (!is_prime(p)) throw PreconditionError(p.get_str() + " is not a prime");
  Place v;
  v.p_ = p;
  return v;
}

std::string Place::to_string() const { return is_infinite() ? "inf" : p_.get_str(); }

Place Place::parse(std::string_view text) {
  if (text == "inf" || text == "oo" || text == "infinity") return infinity();
  Rational r = parse_rational(text);
  if (r.get_den() != 1) throw PreconditionError("place must be a prime or \"inf\"");
  return prime(r.get_num());
}

std::strong_ordering operator<=>(const Place& a, const Place& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
  }
  int c = cmp(a.p_, b.p_);
  return c <=> 0;
}

BrauerSupport::BrauerSupport(std::initializer_list<Place> places)
    : BrauerSupport(std::vector<Place>(places)) {}

BrauerSupport::BrauerSupport(std::vector<Place> places) {
  for (const Place& v : places) toggle(v);
}

bool BrauerSupport::contains(const Place& v) const {
  return std::binary_search(places_.begin(), places_.end(), v);
}

void BrauerSupport::toggle(const Place& v) {
  auto it = std::lower_bound(places_.begin(), places_.end(), v);
  if (it != places_.end() && *it == v) {
    places_.erase(it);
  } else {
    places_.insert(it, v);
  }
}

void BrauerSupport::set(const Place& v, bool bit) {
  if (contains(v) != bit) toggle(v);
}

BrauerSupport BrauerSupport::operator+(const BrauerSupport& other) const {
  BrauerSupport out;
  std::set_symmetric_difference(places_.begin(), places_.end(), other.places_.begin(),
                                other.places_.end(), std::back_inserter(out.places_));
  return out;
}

std::string BrauerSupport::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < places_.size(); ++i) {
    if (i > 0) out += ",";
    out += places_[i].to_string();
  }
  return out + "}";
}

}  // namespace tf::arith
