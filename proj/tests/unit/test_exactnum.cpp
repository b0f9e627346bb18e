#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "cfded/error.hpp"
#include "cfded/integer.hpp"
#include "cfded/rational.hpp"
#include "cfded/surd.hpp"
#include "oracles.hpp"

using cfded::ErrorCode;
using cfded::Integer;
using cfded::Number;
using cfded::QuadSurd;
using cfded::Rational;

namespace {

template <class F>
ErrorCode code_of(F&& body) {
  try {
    body();
  } catch (const cfded::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no cfded::Error thrown";
  return ErrorCode::InternalInvariant;
}

QuadSurd surd(long a, long b, long c, long n) { return QuadSurd::normalize(a, b, c, n); }

void expect_fields(const QuadSurd& s, long a, long b, long c, long n) {
  EXPECT_EQ(s.a(), Integer(a));
  EXPECT_EQ(s.b(), Integer(b));
  EXPECT_EQ(s.c(), Integer(c));
  EXPECT_EQ(s.radicand(), Integer(n));
}

}  // namespace

TEST(Integer, FloorDivisionFollowsMinusInfinity) {
  EXPECT_EQ(cfded::floor_div(7, 2), Integer(3));
  EXPECT_EQ(cfded::floor_div(-7, 2), Integer(-4));
  EXPECT_EQ(cfded::floor_div(7, -2), Integer(-4));
  EXPECT_EQ(cfded::floor_div(-7, -2), Integer(3));
  EXPECT_EQ(cfded::floor_mod(-7, 2), Integer(1));
  EXPECT_EQ(cfded::floor_mod(7, -2), Integer(-1));
  EXPECT_EQ(code_of([] { cfded::floor_div(1, 0); }), ErrorCode::DivisionByZero);
}

TEST(Integer, DivisionIdentityOnRandomValues) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> dist(-1'000'000, 1'000'000);
  for (int t = 0; t < 2000; ++t) {
    const Integer n(dist(rng));
    Integer d(dist(rng));
    if (d.is_zero()) d = Integer(3);
    const Integer q = cfded::floor_div(n, d);
    const Integer r = cfded::floor_mod(n, d);
    EXPECT_EQ(q * d + r, n);
    EXPECT_TRUE(r.is_zero() || r.sign() == d.sign());
    EXPECT_LT(cfded::abs(r), cfded::abs(d));
  }
}

TEST(Integer, SquareRootsAndPowers) {
  EXPECT_EQ(cfded::isqrt(0), Integer(0));
  EXPECT_EQ(cfded::isqrt(53), Integer(7));
  EXPECT_EQ(cfded::isqrt(Integer::parse("100000000000000000000")), Integer::parse("10000000000"));
  EXPECT_EQ(cfded::isqrt(Integer::parse("99999999999999999999")), Integer(9999999999L));
  EXPECT_TRUE(cfded::is_perfect_square(49));
  EXPECT_FALSE(cfded::is_perfect_square(53));
  EXPECT_EQ(cfded::pow(3, 40).to_string(), "12157665459056928801");
  EXPECT_EQ(code_of([] { cfded::isqrt(-1); }), ErrorCode::InvalidArgument);
}

TEST(Integer, GcdAndModularInverse) {
  EXPECT_EQ(cfded::gcd(-12, 18), Integer(6));
  EXPECT_EQ(cfded::gcd(0, 0), Integer(0));
  EXPECT_EQ(cfded::mod_inverse(3, 7), Integer(5));
  EXPECT_EQ(cfded::mod_inverse(-3, 7), Integer(2));
  EXPECT_EQ(cfded::mod_inverse(5, 1), Integer(0));
  EXPECT_EQ(code_of([] { cfded::mod_inverse(4, 8); }), ErrorCode::NotCoprime);
}

TEST(Integer, ParseAndPrint) {
  EXPECT_EQ(Integer::parse("-000123").to_string(), "-123");
  EXPECT_EQ(Integer::parse("+5"), Integer(5));
  EXPECT_EQ(code_of([] { Integer::parse("12a"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { Integer::parse(""); }), ErrorCode::SyntaxError);
  std::ostringstream os;
  os << Integer(-42);
  EXPECT_EQ(os.str(), "-42");
}

TEST(Rational, LowestTermsWithPositiveDenominator) {
  const Rational r(Integer(6), Integer(-8));
  EXPECT_EQ(r.num(), Integer(-3));
  EXPECT_EQ(r.den(), Integer(4));
  EXPECT_EQ(r.to_string(), "-3/4");
  EXPECT_EQ(Rational(Integer(0), Integer(-5)).to_string(), "0");
  EXPECT_EQ(code_of([] { Rational(Integer(1), Integer(0)); }), ErrorCode::ZeroDenominator);
}

TEST(Rational, Parsing) {
  EXPECT_EQ(Rational::parse("3/6"), Rational(Integer(1), Integer(2)));
  EXPECT_EQ(Rational::parse("-0.25"), Rational(Integer(-1), Integer(4)));
  EXPECT_EQ(Rational::parse("1e-6"), Rational(Integer(1), Integer(1'000'000)));
  EXPECT_EQ(Rational::parse("2.5E2"), Rational(250));
  EXPECT_EQ(code_of([] { Rational::parse("1/0"); }), ErrorCode::ZeroDenominator);
  EXPECT_EQ(code_of([] { Rational::parse("abc"); }), ErrorCode::SyntaxError);
}

TEST(Rational, FloorCeilAndDecimals) {
  const Rational x(Integer(-7), Integer(2));
  EXPECT_EQ(x.floor(), Integer(-4));
  EXPECT_EQ(x.ceil(), Integer(-3));
  EXPECT_EQ(Rational(1).to_decimal(3), "1.000");
  EXPECT_EQ(Rational(Integer(-2), Integer(3)).to_decimal(4), "-0.6666");
  EXPECT_EQ(Rational(Integer(1), Integer(3)).to_decimal(0), "0");
}

TEST(Rational, FieldArithmetic) {
  const Rational a(Integer(2), Integer(3));
  const Rational b(Integer(-5), Integer(7));
  EXPECT_EQ(a + b, Rational(Integer(-1), Integer(21)));
  EXPECT_EQ(a * b, Rational(Integer(-10), Integer(21)));
  EXPECT_EQ((a / b) * b, a);
  EXPECT_LT(b, a);
  EXPECT_EQ(code_of([&] { a / Rational(0); }), ErrorCode::DivisionByZero);
}

TEST(SquareFree, SplitsSquareFactors) {
  auto s = cfded::square_free_split(8);
  EXPECT_EQ(s.outer, Integer(2));
  EXPECT_EQ(s.inner, Integer(2));
  s = cfded::square_free_split(53);
  EXPECT_EQ(s.outer, Integer(1));
  EXPECT_EQ(s.inner, Integer(53));
  s = cfded::square_free_split(Integer(1'000'003L) * Integer(1'000'003L) * Integer(6));
  EXPECT_EQ(s.outer, Integer(1'000'003L));
  EXPECT_EQ(s.inner, Integer(6));
  s = cfded::square_free_split(36);
  EXPECT_EQ(s.inner, Integer(1));
}

TEST(SquareFree, RejectsHugeCofactors) {
  // Product of two primes above 10^6 beyond 10^18: not provably squarefree
  // by trial division.
  const Integer big = Integer::parse("1000000000000000003") * Integer::parse("1000000000000000009");
  EXPECT_EQ(code_of([&] { cfded::square_free_split(big); }), ErrorCode::UnsupportedRadicand);
}

TEST(QuadSurd, NormalizationExamples) {
  expect_fields(surd(2, 2, 4, 8), 1, 2, 2, 2);
  expect_fields(surd(0, 1, -1, 53), 0, -1, 1, 53);
  expect_fields(surd(0, 1, 53, 53), 0, 1, 53, 53);
}

TEST(QuadSurd, NormalizationErrors) {
  EXPECT_EQ(code_of([] { surd(1, 1, 0, 5); }), ErrorCode::ZeroDenominator);
  EXPECT_EQ(code_of([] { surd(1, 0, 2, 5); }), ErrorCode::RationalValue);
  EXPECT_EQ(code_of([] { surd(1, 1, 2, 9); }), ErrorCode::PerfectSquare);
  EXPECT_EQ(code_of([] { surd(1, 1, 2, 1); }), ErrorCode::PerfectSquare);
  EXPECT_EQ(code_of([] { surd(1, 1, 2, -5); }), ErrorCode::InvalidArgument);
}

TEST(QuadSurd, ArithmeticExamples) {
  const Number z = surd(0, 1, 53, 53);
  const Number inv = cfded::inverse(z);
  expect_fields(inv.surd(), 0, 1, 1, 53);
  const Number phi = surd(1, 1, 2, 5);
  const Number phi_minus_one = phi - Number(1);
  expect_fields(phi_minus_one.surd(), -1, 1, 2, 5);
  EXPECT_EQ(cfded::inverse(phi_minus_one), phi);
  EXPECT_TRUE((phi - phi).is_rational());
  EXPECT_EQ(phi * Number(surd(1, -1, 2, 5)), Number(-1));
  EXPECT_EQ(code_of([&] { phi + Number(surd(0, 1, 1, 2)); }), ErrorCode::MixedRadicand);
  EXPECT_EQ(code_of([&] { phi / Number(0); }), ErrorCode::DivisionByZero);
}

TEST(QuadSurd, ComparisonExamples) {
  EXPECT_GT(Number(surd(0, 1, 53, 53)), Number(0));
  EXPECT_LT(Number(surd(1, 1, 2, 5)), Number(2));
  EXPECT_LT(Number(surd(636, 60, 371, 53)), Number(surd(477, 57, 212, 53)));
}

TEST(QuadSurd, FloorCeilExamples) {
  EXPECT_EQ(surd(0, 1, 53, 53).floor(), Integer(0));
  EXPECT_EQ(surd(0, 1, 53, 53).ceil(), Integer(1));
  EXPECT_EQ(surd(-1, 1, 1, 53).floor(), Integer(6));
  EXPECT_EQ(surd(0, -1, 1, 2).floor(), Integer(-2));
}

TEST(QuadSurd, DecimalsAreTruncated) {
  EXPECT_EQ(surd(636, 60, 371, 53).to_decimal(5), "2.89166");
  EXPECT_EQ(surd(-159, 54, 53, 53).to_decimal(5), "4.41747");
  EXPECT_EQ(surd(-2862, 60, 371, 53).to_decimal(5), "-6.53690");
  EXPECT_EQ(Number(1).to_decimal(3), "1.000");
  EXPECT_EQ(surd(0, -1, 1, 2).to_decimal(3), "-1.414");
}

TEST(QuadSurd, Rendering) {
  EXPECT_EQ(surd(636, 60, 371, 53).to_expression(), "(636+60*sqrt(53))/371");
  EXPECT_EQ(surd(0, 1, 53, 53).to_expression(), "sqrt(53)/53");
  EXPECT_EQ(surd(0, -1, 1, 5).to_expression(), "-sqrt(5)");
  EXPECT_EQ(surd(-3, 1, 1, 5).to_expression(), "-3+sqrt(5)");
  EXPECT_EQ(surd(636, 60, 371, 53).to_quadruple(), "636 60 371 53");
}

// Properties against the MPFR oracle.

TEST(QuadSurdProperty, FloorAndCeilMatchHighPrecision) {
  oracle::SurdGenerator gen(101);
  for (int t = 0; t < 500; ++t) {
    const QuadSurd x = gen.next();
    const Integer f = x.floor();
    EXPECT_LE(oracle::compare(Number(f), x), 0) << x.to_expression();
    EXPECT_GT(oracle::compare(Number(f + Integer(1)), x), 0) << x.to_expression();
    EXPECT_EQ(x.ceil(), f + Integer(1));
  }
}

TEST(QuadSurdProperty, OrderMatchesHighPrecision) {
  oracle::SurdGenerator gen(202, 12);
  for (int t = 0; t < 1000; ++t) {
    const auto p = gen.parts();
    const auto q = gen.parts();
    const Number x = surd(p.a, p.b, p.c, p.n);
    const Number y = surd(q.a, q.b, p.c, p.n);  // same field
    const int expected = oracle::compare(x, y);
    const auto order = x <=> y;
    EXPECT_EQ(order < 0, expected < 0);
    EXPECT_EQ(order > 0, expected > 0);
  }
}

TEST(QuadSurdProperty, FieldAxioms) {
  oracle::SurdGenerator gen(303, 30);
  for (int t = 0; t < 300; ++t) {
    const auto p = gen.parts();
    const Number x = surd(p.a, p.b, p.c, p.n);
    const auto q = gen.parts();
    const Number y = surd(q.a, q.b, q.c, p.n);
    const Number w = Number(Rational(Integer(q.a), Integer(q.c)));
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x + y) + w, x + (y + w));
    EXPECT_EQ((x * y) * w, x * (y * w));
    EXPECT_EQ(x * (y + w), x * y + x * w);
    EXPECT_EQ(x - x, Number(0));
    EXPECT_EQ(x * cfded::inverse(x), Number(1));
    if (y.sign() != 0) {
      EXPECT_EQ((x / y) * y, x);
    }
  }
}

TEST(QuadSurdProperty, DecimalsMatchHighPrecision) {
  oracle::SurdGenerator gen(404);
  for (int t = 0; t < 300; ++t) {
    const QuadSurd x = gen.next();
    const double expected = oracle::approx(x);
    const double shown = std::stod(x.to_decimal(9));
    EXPECT_NEAR(shown, expected, 1.01e-9);
    EXPECT_LE(std::abs(shown), std::abs(expected) + 1e-12);  // toward zero
  }
}

TEST(QuadSurdProperty, ExpressionRoundTrip) {
  oracle::SurdGenerator gen(505);
  for (int t = 0; t < 200; ++t) {
    const QuadSurd x = gen.next();
    const QuadSurd y = QuadSurd::normalize(x.a(), x.b(), x.c(), x.radicand());
    EXPECT_EQ(x, y);
  }
}

TEST(QuadSurdProperty, CompareAcrossRadicands) {
  oracle::SurdGenerator gen(41);
  for (int t = 0; t < 200; ++t) {
    const cfded::QuadSurd x = gen.next();
    const cfded::QuadSurd y = gen.next();
    const auto order = cfded::compare(x, y);
    const int want = oracle::compare(cfded::Number(x), cfded::Number(y));
    EXPECT_EQ(order < 0, want < 0) << x.to_expression() << " vs " << y.to_expression();
    EXPECT_EQ(order > 0, want > 0) << x.to_expression() << " vs " << y.to_expression();
  }
}
