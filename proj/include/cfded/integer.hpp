#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cfded {

/// Arbitrary-precision signed integer.
///
/// Thin value wrapper around a GMP integer. Every operator materializes its
/// result, so `auto` is always safe (unlike raw gmpxx expression templates).
class Integer {
 public:
  Integer() = default;
  Integer(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Integer(int value) : v_(static_cast<long>(value)) {}  // NOLINT
  explicit Integer(mpz_class value) : v_(std::move(value)) {}

  /// Parses an optionally signed decimal literal. Throws InvalidArgument.
  static Integer parse(std::string_view text);

  const mpz_class& mpz() const noexcept { return v_; }

  int sign() const noexcept { return sgn(v_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_odd() const noexcept { return mpz_odd_p(v_.get_mpz_t()) != 0; }
  bool is_even() const noexcept { return !is_odd(); }

  bool fits_long() const noexcept { return v_.fits_slong_p(); }
  long to_long() const;  // throws InvalidArgument when out of range
  std::string to_string() const { return v_.get_str(10); }
  std::size_t bit_length() const noexcept {
    return is_zero() ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2);
  }

  Integer operator-() const { return Integer(mpz_class(-v_)); }
  Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
  Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
  Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

  friend Integer operator+(const Integer& x, const Integer& y) { return Integer(mpz_class(x.v_ + y.v_)); }
  friend Integer operator-(const Integer& x, const Integer& y) { return Integer(mpz_class(x.v_ - y.v_)); }
  friend Integer operator*(const Integer& x, const Integer& y) { return Integer(mpz_class(x.v_ * y.v_)); }

  friend bool operator==(const Integer& x, const Integer& y) noexcept { return cmp(x.v_, y.v_) == 0; }
  friend std::strong_ordering operator<=>(const Integer& x, const Integer& y) noexcept {
    const int c = cmp(x.v_, y.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& x);

 private:
  mpz_class v_;
};

Integer abs(const Integer& x);

/// Quotient rounded toward -inf. Throws DivisionByZero.
Integer floor_div(const Integer& n, const Integer& d);
/// Remainder with the sign of d; n == floor_div(n, d) * d + floor_mod(n, d).
Integer floor_mod(const Integer& n, const Integer& d);
/// n / d where d is known to divide n.
Integer div_exact(const Integer& n, const Integer& d);
bool divides(const Integer& d, const Integer& n);

Integer gcd(const Integer& x, const Integer& y);
Integer pow(const Integer& base, unsigned long exponent);

/// floor(sqrt(n)) for n >= 0. Throws InvalidArgument for negative n.
Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);

/// Inverse of a modulo m in [0, m); throws NotCoprime when it does not exist.
Integer mod_inverse(const Integer& a, const Integer& m);

}  // namespace cfded
