#include <gtest/gtest.h>

#include "cfded/error.hpp"
#include "cfded/parse.hpp"

using cfded::ErrorCode;
using cfded::Integer;

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

std::string fields(std::string_view text) { return cfded::parse_surd(text).value.to_quadruple(); }

}  // namespace

TEST(ParseSurd, KnownValues) {
  EXPECT_EQ(fields("1/sqrt(53)"), "0 1 53 53");
  EXPECT_EQ(fields("(1+sqrt(5))/2"), "1 1 2 5");
  EXPECT_EQ(code_of([] { cfded::parse_surd("sqrt(9)"); }), ErrorCode::PerfectSquare);
}

TEST(ParseSurd, GrammarForms) {
  EXPECT_EQ(fields("sqrt(2)"), "0 1 1 2");
  EXPECT_EQ(fields("3*sqrt(8)"), "0 6 1 2");
  EXPECT_EQ(fields("(636+60*sqrt(53))/371"), "636 60 371 53");
  EXPECT_EQ(fields("-(1-sqrt(5))/2"), "-1 1 2 5");
  EXPECT_EQ(fields("  ( 7 - sqrt( 53 ) )  "), "7 -1 1 53");
  EXPECT_EQ(fields("1/(sqrt(5)-2)"), "2 1 1 5");
  EXPECT_EQ(fields("sqrt(12)/sqrt(3)*sqrt(2)"), "0 2 1 2");
}

TEST(ParseSurd, SourceIsKept) { EXPECT_EQ(cfded::parse_surd("1/sqrt(53)").source, "1/sqrt(53)"); }

TEST(ParseSurd, RoundTripThroughCanonicalExpression) {
  for (const char* text : {"1/sqrt(53)", "(1+sqrt(5))/2", "(-1749-46*sqrt(53))/371", "-sqrt(7)", "4+sqrt(3)"}) {
    const auto first = cfded::parse_surd(text).value;
    const auto second = cfded::parse_surd(first.to_expression()).value;
    EXPECT_EQ(first, second) << text;
  }
}

TEST(ParseSurd, RationalResultsAreRejected) {
  EXPECT_EQ(code_of([] { cfded::parse_surd("3/4"); }), ErrorCode::RationalValue);
  EXPECT_EQ(code_of([] { cfded::parse_surd("sqrt(5)-sqrt(5)"); }), ErrorCode::RationalValue);
  EXPECT_EQ(code_of([] { cfded::parse_surd("sqrt(2)*sqrt(2)"); }), ErrorCode::RationalValue);
}

TEST(ParseSurd, Errors) {
  EXPECT_EQ(code_of([] { cfded::parse_surd(""); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { cfded::parse_surd("1+"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { cfded::parse_surd("(1+sqrt(5)"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { cfded::parse_surd("sqrt(x)"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { cfded::parse_surd("sqrt(1+1)"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { cfded::parse_surd("2 sqrt(3)"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { cfded::parse_surd("1/0+sqrt(2)"); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([] { cfded::parse_surd("sqrt(2)+sqrt(3)"); }), ErrorCode::MixedRadicand);
  EXPECT_EQ(code_of([] { cfded::parse_surd("sqrt(-3)"); }), ErrorCode::SyntaxError);
}

TEST(ParseSurd, SyntaxErrorsCarryPosition) {
  try {
    cfded::parse_surd("(1+sqrt(5)]");
    FAIL();
  } catch (const cfded::SyntaxError& e) {
    EXPECT_EQ(e.position(), 10U);
  }
}

TEST(ParseNumber, RationalsAreAllowed) {
  const auto x = cfded::parse_number("3/6");
  ASSERT_TRUE(x.is_rational());
  EXPECT_EQ(x.rational().to_string(), "1/2");
}

TEST(ParseDigits, ListsAndRepeats) {
  const auto d = cfded::parse_digit_list("3,4, 3 2^3,3");
  std::vector<Integer> want{3, 4, 3, 2, 2, 2, 3};
  EXPECT_EQ(d, want);
  EXPECT_EQ(cfded::parse_digit_list("-1, 2").front(), Integer(-1));
  EXPECT_EQ(cfded::parse_digit_list("2^0,5"), std::vector<Integer>{5});
}

TEST(ParseDigits, Errors) {
  EXPECT_EQ(code_of([] { cfded::parse_digit_list(""); }), ErrorCode::EmptyInput);
  EXPECT_EQ(code_of([] { cfded::parse_digit_list(" , "); }), ErrorCode::EmptyInput);
  EXPECT_EQ(code_of([] { cfded::parse_digit_list("1,x"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { cfded::parse_digit_list("2^"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { cfded::parse_digit_list("2^-1"); }), ErrorCode::SyntaxError);
}
