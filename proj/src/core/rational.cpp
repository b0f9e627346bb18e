#include "cfded/rational.hpp"

#include <ostream>

#include "cfded/error.hpp"

namespace cfded {

Rational::Rational(Integer num, Integer den) {
  if (den.is_zero()) fail(ErrorCode::ZeroDenominator, "rational with zero denominator");
  if (den.sign() < 0) {
    num = -num;
    den = -den;
  }
  const Integer g = gcd(num, den);
  if (g != Integer(1)) {
    num = div_exact(num, g);
    den = div_exact(den, g);
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  if (s.empty()) fail(ErrorCode::SyntaxError, "empty rational literal");
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    return Rational(Integer::parse(s.substr(0, slash)), Integer::parse(s.substr(slash + 1)));
  }
  // Decimal / scientific form, taken exactly.
  std::string mantissa = s;
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string::npos) {
    mantissa = s.substr(0, e);
    exponent = Integer::parse(s.substr(e + 1)).to_long();
  }
  std::string digits = mantissa;
  if (const auto dot = mantissa.find('.'); dot != std::string::npos) {
    digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
    exponent -= static_cast<long>(mantissa.size() - dot - 1);
    if (digits.empty() || digits == "-" || digits == "+")
      fail(ErrorCode::SyntaxError, "invalid rational literal '" + s + "'");
  }
  const Integer value = Integer::parse(digits);
  if (exponent >= 0) return Rational(value * pow(Integer(10), static_cast<unsigned long>(exponent)));
  return Rational(value, pow(Integer(10), static_cast<unsigned long>(-exponent)));
}

std::string Rational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

std::string format_fixed_point(bool negative, const Integer& magnitude, unsigned digits) {
  std::string s = magnitude.to_string();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  if (negative) s.insert(0, "-");
  return s;
}

std::string Rational::to_decimal(unsigned digits) const {
  const Integer scaled = floor_div(abs(num_) * pow(Integer(10), digits), den_);
  return format_fixed_point(sign() < 0, scaled, digits);
}

Rational Rational::operator-() const { return Rational(-num_, den_, Normalized{}); }

Rational& Rational::operator+=(const Rational& o) {
  *this = Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  *this = Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  *this = Rational(num_ * o.num_, den_ * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorCode::DivisionByZero, "rational division by zero");
  *this = Rational(num_ * o.den_, den_ * o.num_);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

}  // namespace cfded
