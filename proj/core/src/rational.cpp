#include "floormap/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace floormap {

namespace {

// gcd of magnitudes; boost provides it for cpp_int.
Int gcd_abs(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a < 0 ? Int(-a) : a, b < 0 ? Int(-b) : b);
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Int parse_digits(std::string_view s) {
  // cpp_int's string constructor accepts a leading sign and digits; we only
  // feed it pre-validated digit runs (sign handled by the caller).
  return Int(std::string(s));
}

// 10^k as cpp_int.
Int pow10(std::size_t k) {
  Int p = 1;
  for (std::size_t i = 0; i < k; ++i) p *= 10;
  return p;
}

}  // namespace

Rational::Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_ == 0) throw std::domain_error("rational: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = gcd_abs(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("rational: empty string");

  bool neg = false;
  std::string_view body = text;
  if (body.front() == '-' || body.front() == '+') {
    neg = body.front() == '-';
    body.remove_prefix(1);
    if (body.empty()) throw std::invalid_argument("rational: sign without digits");
  }

  auto slash = body.find('/');
  auto dot = body.find('.');
  if (slash != std::string_view::npos && dot != std::string_view::npos)
    throw std::invalid_argument("rational: mixed '/' and '.' notation");

  if (slash != std::string_view::npos) {
    std::string_view ns = body.substr(0, slash);
    std::string_view ds = body.substr(slash + 1);
    if (!all_digits(ns) || !all_digits(ds))
      throw std::invalid_argument("rational: malformed fraction '" + std::string(text) + "'");
    Int n = parse_digits(ns);
    Int d = parse_digits(ds);
    if (d == 0) throw std::domain_error("rational: zero denominator");
    if (neg) n = -n;
    return Rational(std::move(n), std::move(d));
  }

  if (dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac))
      throw std::invalid_argument("rational: malformed decimal '" + std::string(text) + "'");
    Int scale = pow10(frac.size());
    Int n = parse_digits(whole) * scale + parse_digits(frac);
    if (neg) n = -n;
    return Rational(std::move(n), std::move(scale));
  }

  if (!all_digits(body))
    throw std::invalid_argument("rational: malformed integer '" + std::string(text) + "'");
  Int n = parse_digits(body);
  if (neg) n = -n;
  return Rational(std::move(n));
}

Int Rational::floor() const {
  Int q, r;
  boost::multiprecision::divide_qr(num_, den_, q, r);
  // divide_qr truncates toward zero; fix up for negative non-integers.
  if (r != 0 && num_ < 0) --q;
  return q;
}

Int Rational::ceil() const {
  Int q, r;
  boost::multiprecision::divide_qr(num_, den_, q, r);
  if (r != 0 && num_ > 0) ++q;
  return q;
}

std::string Rational::str() const {
  std::string out = num_.str();
  if (den_ != 1) {
    out += '/';
    out += den_.str();
  }
  return out;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("rational: division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

int cmp(const Rational& a, const Rational& b) {
  // Denominators are positive, so cross-multiplication preserves order.
  Int lhs = a.num_ * b.den_;
  Int rhs = b.num_ * a.den_;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace floormap
