#include "cfded/parse.hpp"

#include <cctype>

#include "cfded/error.hpp"

namespace cfded {

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  Number parse() {
    Number value = expression();
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  Number expression() {
    Number value = term();
    for (;;) {
      skip_space();
      if (accept('+')) {
        value = value + term();
      } else if (accept('-')) {
        value = value - term();
      } else {
        return value;
      }
    }
  }

  Number term() {
    Number value = unary();
    for (;;) {
      skip_space();
      if (accept('*')) {
        value = value * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Number divisor = unary();
        if (divisor.is_rational() && divisor.rational().is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero at position " + std::to_string(at));
        value = value / divisor;
      } else {
        return value;
      }
    }
  }

  Number unary() {
    skip_space();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }

  Number primary() {
    skip_space();
    if (pos_ >= text_.size()) throw SyntaxError(pos_, "unexpected end of input");
    if (accept('(')) {
      Number value = expression();
      skip_space();
      expect(')');
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) return Number(integer_literal());
    if (text_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      skip_space();
      expect('(');
      skip_space();
      const std::size_t at = pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw SyntaxError(pos_, "sqrt expects a non-negative integer literal");
      const Integer radicand = integer_literal();
      skip_space();
      expect(')');
      if (is_perfect_square(radicand))
        throw Error(ErrorCode::PerfectSquare,
                    "sqrt(" + radicand.to_string() + ") is rational at position " + std::to_string(at));
      const SquareFreeSplit split = square_free_split(radicand);
      if (split.inner == Integer(1))
        throw Error(ErrorCode::PerfectSquare, "sqrt(" + radicand.to_string() + ") is rational");
      return Number::from_parts(Integer(0), split.outer, Integer(1), split.inner);
    }
    throw SyntaxError(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  Integer integer_literal() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer::parse(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw SyntaxError(pos_, std::string("expected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Number parse_number(std::string_view text) { return ExpressionParser(text).parse(); }

SurdExpr parse_surd(std::string_view text) {
  Number value = parse_number(text);
  if (value.is_rational())
    fail(ErrorCode::RationalValue, "'" + std::string(text) + "' evaluates to the rational " +
                                       value.rational().to_string());
  return {std::string(text), value.surd()};
}

std::vector<Integer> parse_digit_list(std::string_view text) {
  std::vector<Integer> out;
  std::size_t pos = 0;
  auto skip_separators = [&] {
    while (pos < text.size() && (text[pos] == ',' || std::isspace(static_cast<unsigned char>(text[pos])))) ++pos;
  };
  auto read_integer = [&]() {
    const std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    const std::size_t digits_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits_start) throw SyntaxError(start, "expected an integer");
    return Integer::parse(text.substr(start, pos - start));
  };
  skip_separators();
  while (pos < text.size()) {
    Integer digit = read_integer();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      const std::size_t at = pos;
      const Integer count = read_integer();
      if (count.sign() < 0 || !count.fits_long() || count > Integer(1'000'000))
        throw SyntaxError(at, "repeat count must be between 0 and 1000000");
      for (long t = 0; t < count.to_long(); ++t) out.push_back(digit);
    } else {
      out.push_back(std::move(digit));
    }
    if (pos < text.size() && text[pos] != ',' && !std::isspace(static_cast<unsigned char>(text[pos])))
      throw SyntaxError(pos, "unexpected '" + std::string(1, text[pos]) + "'");
    skip_separators();
  }
  if (out.empty()) fail(ErrorCode::EmptyInput, "empty digit list");
  return out;
}

}  // namespace cfded
