#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "cfded/integer.hpp"

namespace cfded {

/// Exact fraction kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Integer value) : num_(std::move(value)), den_(1) {}  // NOLINT
  Rational(long value) : num_(value), den_(1) {}                // NOLINT
  Rational(int value) : num_(value), den_(1) {}                 // NOLINT
  /// Throws ZeroDenominator when den == 0.
  Rational(Integer num, Integer den);

  /// Accepts "n", "n/d", and plain decimal or scientific notation
  /// ("0.25", "1e-6"); the value is taken exactly.
  static Rational parse(std::string_view text);

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }

  int sign() const noexcept { return num_.sign(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_ == Integer(1); }

  Integer floor() const { return floor_div(num_, den_); }
  Integer ceil() const { return -floor_div(-num_, den_); }

  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const;
  /// Truncated toward zero to `digits` places, e.g. "-1.500".
  std::string to_decimal(unsigned digits) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational x, const Rational& y) { return x += y; }
  friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
  friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
  friend Rational operator/(Rational x, const Rational& y) { return x /= y; }

  friend bool operator==(const Rational& x, const Rational& y) noexcept {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    return x.num_ * y.den_ <=> y.num_ * x.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x);

 private:
  struct Normalized {};
  Rational(Integer num, Integer den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}

  Integer num_;
  Integer den_;
};

Rational abs(const Rational& x);

/// Renders sign * floor(|scaled|) / 10^digits as a fixed-point string. Shared
/// by the rational and surd decimal printers.
std::string format_fixed_point(bool negative, const Integer& magnitude, unsigned digits);

}  // namespace cfded
