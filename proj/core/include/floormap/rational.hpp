#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace floormap {

/// Signed integer of unbounded magnitude. Orbits of the map grow
/// geometrically for |lambda| > 1, so fixed-width arithmetic would silently
/// corrupt divergence certificates.
using Int = boost::multiprecision::cpp_int;

/// Exact rational number in canonical form: denominator > 0 and
/// gcd(|numerator|, denominator) = 1. Two values are equal iff their
/// canonical fields are equal. Construction normalizes once; every
/// operation returns a canonical value, so non-canonical states are
/// unrepresentable. Immutable in use, safe to share across threads.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(Int n) : num_(std::move(n)), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}

  /// Normalizes sign and reduces. Throws std::domain_error if d == 0.
  Rational(Int n, Int d);
  Rational(long long n, long long d) : Rational(Int(n), Int(d)) {}

  /// Parses "p", "p/q" (q > 0) or a finite decimal like "-0.75".
  /// Decimals are expanded exactly (0.75 -> 3/4), never through binary
  /// floating point. Throws std::invalid_argument on malformed text and
  /// std::domain_error on a zero denominator.
  static Rational parse(std::string_view text);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  /// Greatest integer <= *this; satisfies floor() <= *this < floor() + 1.
  Int floor() const;
  /// Least integer >= *this.
  Int ceil() const;

  /// Canonical rendering: "p/q", or bare "p" when the denominator is 1.
  /// parse(str()) round-trips exactly.
  std::string str() const;

  Rational operator-() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  /// Throws std::domain_error when b == 0.
  friend Rational operator/(const Rational& a, const Rational& b);

  /// Total order consistent with the reals: -1 / 0 / +1.
  friend int cmp(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a, b) > 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a, b) <= 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a, b) >= 0; }

private:
  Int num_;  // carries the sign
  Int den_;  // always > 0
};

Rational abs(const Rational& q);

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace floormap
