#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <variant>

#include "cfded/integer.hpp"
#include "cfded/rational.hpp"

namespace cfded {

/// n == outer^2 * inner with inner squarefree (inner may be 1).
struct SquareFreeSplit {
  Integer outer;
  Integer inner;
};

/// Splits n >= 1 into square and squarefree parts. Primes up to 10^6 are
/// removed by trial division; a leftover cofactor is accepted when it is a
/// perfect square or too small to hide a square of a larger prime, and
/// rejected with UnsupportedRadicand otherwise.
SquareFreeSplit square_free_split(const Integer& n);

/// Canonical real quadratic irrational (a + b*sqrt(N)) / c.
///
/// Invariants: b != 0, c > 0, gcd(a, b, c) == 1, N >= 2 squarefree. Two
/// surds are equal as real numbers iff their fields are identical.
class QuadSurd {
 public:
  /// Full normalization: pulls square factors of N into b, forces c > 0 and
  /// divides out gcd(a, b, c). Throws ZeroDenominator, RationalValue (b == 0),
  /// PerfectSquare, InvalidArgument (N < 2) or UnsupportedRadicand.
  static QuadSurd normalize(Integer a, Integer b, Integer c, Integer radicand);

  const Integer& a() const noexcept { return a_; }
  const Integer& b() const noexcept { return b_; }
  const Integer& c() const noexcept { return c_; }
  const Integer& radicand() const noexcept { return n_; }

  Integer floor() const;
  Integer ceil() const { return floor() + Integer(1); }

  /// Galois conjugate (a - b*sqrt(N)) / c.
  QuadSurd conjugate() const;

  /// Digits after the point, truncated toward zero ("-5.61694").
  std::string to_decimal(unsigned digits) const;
  /// Parseable canonical expression, e.g. "(636+60*sqrt(53))/371".
  std::string to_expression() const;
  /// "a b c N".
  std::string to_quadruple() const;

  friend bool operator==(const QuadSurd&, const QuadSurd&) = default;

  friend std::ostream& operator<<(std::ostream& os, const QuadSurd& x);

 private:
  friend class Number;
  QuadSurd(Integer a, Integer b, Integer c, Integer n)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), n_(std::move(n)) {}

  /// Gcd and sign normalization only; N must already be squarefree, b != 0.
  static QuadSurd reduce(Integer a, Integer b, Integer c, Integer n);

  Integer a_;
  Integer b_;
  Integer c_;
  Integer n_;
};

/// Lexicographic order on the canonical fields. Not the numeric order; used
/// for keyed lookup of complete quotients.
struct SurdFieldLess {
  bool operator()(const QuadSurd& x, const QuadSurd& y) const;
};

/// An element of Q(sqrt(N)): either a rational or a canonical surd.
///
/// Arithmetic degrades to Rational when the sqrt coefficient cancels and
/// throws MixedRadicand when two surds over different fields meet.
class Number {
 public:
  Number() : v_(Rational()) {}
  Number(Rational r) : v_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Number(QuadSurd s) : v_(std::move(s)) {}  // NOLINT
  Number(Integer i) : v_(Rational(std::move(i))) {}  // NOLINT
  Number(long i) : v_(Rational(i)) {}       // NOLINT
  Number(int i) : v_(Rational(i)) {}        // NOLINT

  /// (a + b*sqrt(N)) / c with N squarefree (checked loosely: N >= 2), or a
  /// Rational when b == 0.
  static Number from_parts(Integer a, Integer b, Integer c, Integer radicand);

  bool is_surd() const noexcept { return std::holds_alternative<QuadSurd>(v_); }
  bool is_rational() const noexcept { return !is_surd(); }
  const QuadSurd& surd() const;        // throws RationalValue
  const Rational& rational() const;    // throws InvalidArgument

  int sign() const;
  Integer floor() const;
  Integer ceil() const;
  std::string to_decimal(unsigned digits) const;
  std::string to_expression() const;

  Number operator-() const;
  friend Number operator+(const Number& x, const Number& y);
  friend Number operator-(const Number& x, const Number& y);
  friend Number operator*(const Number& x, const Number& y);
  /// Throws DivisionByZero.
  friend Number operator/(const Number& x, const Number& y);

  friend bool operator==(const Number& x, const Number& y) { return x.v_ == y.v_; }
  /// Exact numeric order; throws MixedRadicand.
  friend std::strong_ordering operator<=>(const Number& x, const Number& y);

  friend std::ostream& operator<<(std::ostream& os, const Number& x);

 private:
  std::variant<Rational, QuadSurd> v_;
};

Number inverse(const Number& x);

/// Exact sign of a + b*sqrt(n) for n >= 0 (no floating point involved).
int sign_of_sum(const Integer& a, const Integer& b, const Integer& n);

/// Exact order of two surds, also across different radicands.
std::strong_ordering compare(const QuadSurd& x, const QuadSurd& y);

}  // namespace cfded
