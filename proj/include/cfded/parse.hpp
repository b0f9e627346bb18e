#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cfded/integer.hpp"
#include "cfded/surd.hpp"

namespace cfded {

/// A parsed surd expression together with its source text.
struct SurdExpr {
  std::string source;
  QuadSurd value;
};

/// Evaluates an expression over integers and sqrt(<integer>) with + - * /,
/// unary minus and parentheses, exactly in Q(sqrt N):
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('-' | '+') unary | primary
///   primary := integer | 'sqrt' '(' integer ')' | '(' expr ')'
///
/// Throws SyntaxError (with position), PerfectSquare for sqrt of a square,
/// MixedRadicand, DivisionByZero.
Number parse_number(std::string_view text);

/// parse_number, then requires an irrational result (RationalValue otherwise).
SurdExpr parse_surd(std::string_view text);

/// Comma or whitespace separated integers; "2^7" expands to seven 2s.
/// Throws SyntaxError, EmptyInput.
std::vector<Integer> parse_digit_list(std::string_view text);

}  // namespace cfded
