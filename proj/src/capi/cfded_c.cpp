#include "cfded/cfded.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <variant>

#include "cfded/clusters.hpp"
#include "cfded/contfrac.hpp"
#include "cfded/dedekind.hpp"
#include "cfded/error.hpp"
#include "cfded/parse.hpp"
#include "cfded/report.hpp"
#include "cfded/surd.hpp"
#include "cfded/verify.hpp"

struct cfded_surd {
  cfded::QuadSurd value;
};

struct cfded_expansion {
  std::variant<cfded::RegularExpansion, cfded::NegativeExpansion> value;

  const cfded::PeriodicExpansion& base() const {
    return std::visit([](const auto& e) -> const cfded::PeriodicExpansion& { return e; }, value);
  }
};

struct cfded_digits {
  cfded::Kind kind;
  std::vector<cfded::Integer> values;
};

namespace {

thread_local std::string last_error;

cfded_status status_of(cfded::ErrorCode code) {
  using cfded::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return CFDED_ERR_INVALID_ARGUMENT;
    case ErrorCode::ZeroDenominator: return CFDED_ERR_ZERO_DENOMINATOR;
    case ErrorCode::DivisionByZero: return CFDED_ERR_DIVISION_BY_ZERO;
    case ErrorCode::PerfectSquare: return CFDED_ERR_PERFECT_SQUARE;
    case ErrorCode::UnsupportedRadicand: return CFDED_ERR_UNSUPPORTED_RADICAND;
    case ErrorCode::MixedRadicand: return CFDED_ERR_MIXED_RADICAND;
    case ErrorCode::RationalValue: return CFDED_ERR_RATIONAL_VALUE;
    case ErrorCode::SyntaxError: return CFDED_ERR_SYNTAX;
    case ErrorCode::IndexOutOfRange: return CFDED_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::IndexBeforePeriod: return CFDED_ERR_INDEX_BEFORE_PERIOD;
    case ErrorCode::InvalidPeriod: return CFDED_ERR_INVALID_PERIOD;
    case ErrorCode::NotCoprime: return CFDED_ERR_NOT_COPRIME;
    case ErrorCode::NotBounded: return CFDED_ERR_NOT_BOUNDED;
    case ErrorCode::NotFound: return CFDED_ERR_NOT_FOUND;
    case ErrorCode::ToleranceNotReached: return CFDED_ERR_TOLERANCE_NOT_REACHED;
    case ErrorCode::IterationLimit: return CFDED_ERR_ITERATION_LIMIT;
    case ErrorCode::EmptyInput: return CFDED_ERR_EMPTY_INPUT;
    case ErrorCode::InternalInvariant: return CFDED_ERR_INTERNAL;
  }
  return CFDED_ERR_INTERNAL;
}

cfded_status fail_with(cfded_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
cfded_status guarded(F&& body) {
  try {
    return body();
  } catch (const cfded::Error& e) {
    return fail_with(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail_with(CFDED_ERR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail_with(CFDED_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** slot, const std::string& s) {
  if (slot) *slot = copy_string(s);
}

#define REQUIRE(cond, what)                                                    \
  do {                                                                         \
    if (!(cond)) return fail_with(CFDED_ERR_INVALID_ARGUMENT, what " is NULL"); \
  } while (0)

cfded::Integer integer_arg(const char* text) {
  if (!text) cfded::fail(cfded::ErrorCode::InvalidArgument, "integer argument is NULL");
  return cfded::Integer::parse(text);
}

cfded::report::Format format_of(cfded_format f) {
  return f == CFDED_FORMAT_JSON ? cfded::report::Format::Json : cfded::report::Format::Text;
}

cfded::Kind kind_of(cfded_kind k) { return k == CFDED_NEGATIVE ? cfded::Kind::Negative : cfded::Kind::Regular; }

cfded_kind kind_to_c(cfded::Kind k) { return k == cfded::Kind::Negative ? CFDED_NEGATIVE : CFDED_REGULAR; }

const cfded::NegativeExpansion* negative_of(const cfded_expansion* e) {
  return std::get_if<cfded::NegativeExpansion>(&e->value);
}

}  // namespace

extern "C" {

const char* cfded_version(void) { return "1.0.0"; }

const char* cfded_status_name(cfded_status status) {
  switch (status) {
    case CFDED_OK: return "ok";
    case CFDED_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case CFDED_ERR_SYNTAX: return "syntax_error";
    case CFDED_ERR_ZERO_DENOMINATOR: return "zero_denominator";
    case CFDED_ERR_DIVISION_BY_ZERO: return "division_by_zero";
    case CFDED_ERR_PERFECT_SQUARE: return "perfect_square";
    case CFDED_ERR_UNSUPPORTED_RADICAND: return "unsupported_radicand";
    case CFDED_ERR_MIXED_RADICAND: return "mixed_radicand";
    case CFDED_ERR_RATIONAL_VALUE: return "rational_value";
    case CFDED_ERR_INDEX_OUT_OF_RANGE: return "index_out_of_range";
    case CFDED_ERR_INDEX_BEFORE_PERIOD: return "index_before_period";
    case CFDED_ERR_INVALID_PERIOD: return "invalid_period";
    case CFDED_ERR_NOT_COPRIME: return "not_coprime";
    case CFDED_ERR_NOT_BOUNDED: return "not_bounded";
    case CFDED_ERR_NOT_FOUND: return "not_found";
    case CFDED_ERR_TOLERANCE_NOT_REACHED: return "tolerance_not_reached";
    case CFDED_ERR_ITERATION_LIMIT: return "iteration_limit";
    case CFDED_ERR_EMPTY_INPUT: return "empty_input";
    case CFDED_ERR_INTERNAL: return "internal_error";
    case CFDED_ERR_VERIFICATION_FAILED: return "verification_failed";
    case CFDED_ERR_OUT_OF_MEMORY: return "out_of_memory";
  }
  return "unknown";
}

const char* cfded_last_error(void) { return last_error.c_str(); }

void cfded_string_free(char* text) { std::free(text); }

cfded_status cfded_surd_parse(const char* text, cfded_surd** out) {
  REQUIRE(text, "text");
  REQUIRE(out, "out");
  return guarded([&] {
    *out = new cfded_surd{cfded::parse_surd(text).value};
    return CFDED_OK;
  });
}

cfded_status cfded_surd_from_parts(const char* a, const char* b, const char* c, const char* n, cfded_surd** out) {
  REQUIRE(out, "out");
  return guarded([&] {
    *out = new cfded_surd{
        cfded::QuadSurd::normalize(integer_arg(a), integer_arg(b), integer_arg(c), integer_arg(n))};
    return CFDED_OK;
  });
}

void cfded_surd_free(cfded_surd* surd) { delete surd; }

cfded_status cfded_surd_parts(const cfded_surd* surd, char** a, char** b, char** c, char** n) {
  REQUIRE(surd, "surd");
  return guarded([&] {
    put(a, surd->value.a().to_string());
    put(b, surd->value.b().to_string());
    put(c, surd->value.c().to_string());
    put(n, surd->value.radicand().to_string());
    return CFDED_OK;
  });
}

cfded_status cfded_surd_expression(const cfded_surd* surd, char** out) {
  REQUIRE(surd, "surd");
  REQUIRE(out, "out");
  return guarded([&] {
    *out = copy_string(surd->value.to_expression());
    return CFDED_OK;
  });
}

cfded_status cfded_surd_decimal(const cfded_surd* surd, unsigned digits, char** out) {
  REQUIRE(surd, "surd");
  REQUIRE(out, "out");
  return guarded([&] {
    *out = copy_string(surd->value.to_decimal(digits));
    return CFDED_OK;
  });
}

cfded_status cfded_surd_compare(const cfded_surd* x, const cfded_surd* y, int* out) {
  REQUIRE(x, "x");
  REQUIRE(y, "y");
  REQUIRE(out, "out");
  return guarded([&] {
    const auto order = cfded::compare(x->value, y->value);
    *out = order < 0 ? -1 : (order > 0 ? 1 : 0);
    return CFDED_OK;
  });
}

cfded_status cfded_surd_floor(const cfded_surd* surd, char** out) {
  REQUIRE(surd, "surd");
  REQUIRE(out, "out");
  return guarded([&] {
    *out = copy_string(surd->value.floor().to_string());
    return CFDED_OK;
  });
}

cfded_status cfded_expand(const cfded_surd* surd, cfded_kind kind, cfded_expansion** out) {
  REQUIRE(surd, "surd");
  REQUIRE(out, "out");
  return guarded([&] {
    if (kind == CFDED_NEGATIVE)
      *out = new cfded_expansion{cfded::expand_negative(surd->value)};
    else
      *out = new cfded_expansion{cfded::expand_regular(surd->value)};
    return CFDED_OK;
  });
}

void cfded_expansion_free(cfded_expansion* expansion) { delete expansion; }

cfded_kind cfded_expansion_kind(const cfded_expansion* expansion) {
  return expansion && negative_of(expansion) ? CFDED_NEGATIVE : CFDED_REGULAR;
}

size_t cfded_expansion_preperiod_length(const cfded_expansion* expansion) {
  return expansion ? expansion->base().preperiod().size() : 0;
}

size_t cfded_expansion_period_length(const cfded_expansion* expansion) {
  return expansion ? expansion->base().period().size() : 0;
}

cfded_status cfded_expansion_digit(const cfded_expansion* expansion, size_t index, char** out) {
  REQUIRE(expansion, "expansion");
  REQUIRE(out, "out");
  return guarded([&] {
    *out = copy_string(expansion->base().digit(index).to_string());
    return CFDED_OK;
  });
}

cfded_status cfded_expansion_convergent(const cfded_expansion* expansion, long index, char** num, char** den) {
  REQUIRE(expansion, "expansion");
  return guarded([&] {
    if (index < -1) cfded::fail(cfded::ErrorCode::IndexOutOfRange, "convergent index below -1");
    const auto table = cfded::convergents(expansion->base().digits(), static_cast<std::size_t>(index < 0 ? 0 : index));
    const auto& entry = table.at(index);
    put(num, entry.num.to_string());
    put(den, entry.den.to_string());
    return CFDED_OK;
  });
}

cfded_status cfded_expansion_is_floor_convergent(const cfded_expansion* expansion, size_t j, int* out) {
  REQUIRE(expansion, "expansion");
  REQUIRE(out, "out");
  const auto* negative = negative_of(expansion);
  if (!negative) return fail_with(CFDED_ERR_INVALID_ARGUMENT, "expansion is not negative");
  return guarded([&] {
    *out = cfded::is_floor_convergent(negative->digits(), j) ? 1 : 0;
    return CFDED_OK;
  });
}

cfded_status cfded_expansion_legendre(const cfded_expansion* expansion, size_t j, int* holds) {
  REQUIRE(expansion, "expansion");
  REQUIRE(holds, "holds");
  const auto* negative = negative_of(expansion);
  if (!negative) return fail_with(CFDED_ERR_INVALID_ARGUMENT, "expansion is not negative");
  return guarded([&] {
    *holds = cfded::legendre_witness(*negative, j).holds ? 1 : 0;
    return CFDED_OK;
  });
}

cfded_status cfded_digits_parse(const char* text, cfded_kind kind, cfded_digits** out) {
  REQUIRE(text, "text");
  REQUIRE(out, "out");
  return guarded([&] {
    *out = new cfded_digits{kind_of(kind), cfded::parse_digit_list(text)};
    return CFDED_OK;
  });
}

void cfded_digits_free(cfded_digits* digits) { delete digits; }

cfded_kind cfded_digits_kind(const cfded_digits* digits) { return digits ? kind_to_c(digits->kind) : CFDED_REGULAR; }

size_t cfded_digits_length(const cfded_digits* digits) { return digits ? digits->values.size() : 0; }

cfded_status cfded_digits_at(const cfded_digits* digits, size_t index, char** out) {
  REQUIRE(digits, "digits");
  REQUIRE(out, "out");
  if (index >= digits->values.size()) return fail_with(CFDED_ERR_INDEX_OUT_OF_RANGE, "digit index out of range");
  return guarded([&] {
    *out = copy_string(digits->values[index].to_string());
    return CFDED_OK;
  });
}

cfded_status cfded_digits_transition(const cfded_digits* regular, cfded_digits** out) {
  REQUIRE(regular, "regular");
  REQUIRE(out, "out");
  if (regular->kind != cfded::Kind::Regular) return fail_with(CFDED_ERR_INVALID_ARGUMENT, "digits are not regular");
  return guarded([&] {
    *out = new cfded_digits{cfded::Kind::Negative, cfded::transition_prefix(regular->values)};
    return CFDED_OK;
  });
}

cfded_status cfded_dedekind(const char* a, const char* b, cfded_route route, char** out) {
  REQUIRE(out, "out");
  return guarded([&] {
    const auto x = integer_arg(a);
    const auto y = integer_arg(b);
    const auto value = route == CFDED_ROUTE_NAIVE ? cfded::dedekind_naive(x, y) : cfded::dedekind_fast(x, y);
    *out = copy_string(value.value.to_string());
    return CFDED_OK;
  });
}

cfded_status cfded_report_expand(const cfded_surd* surd, unsigned kinds_mask, size_t depth, cfded_format format,
                                 char** out) {
  REQUIRE(surd, "surd");
  REQUIRE(out, "out");
  if ((kinds_mask & 3u) == 0) return fail_with(CFDED_ERR_INVALID_ARGUMENT, "kinds_mask selects no expansion");
  return guarded([&] {
    *out = copy_string(
        cfded::report::expand(surd->value, (kinds_mask & 1u) != 0, (kinds_mask & 2u) != 0, depth, format_of(format)));
    return CFDED_OK;
  });
}

cfded_status cfded_report_expand_digits(const cfded_digits* digits, cfded_format format, char** out) {
  REQUIRE(digits, "digits");
  REQUIRE(out, "out");
  return guarded([&] {
    *out = copy_string(cfded::report::expand_digits(digits->values, digits->kind, format_of(format)));
    return CFDED_OK;
  });
}

cfded_status cfded_report_convergents(const cfded_surd* surd, size_t depth, cfded_format format, char** out) {
  REQUIRE(surd, "surd");
  REQUIRE(out, "out");
  return guarded([&] {
    *out = copy_string(cfded::report::convergents(surd->value, depth, format_of(format)));
    return CFDED_OK;
  });
}

cfded_status cfded_report_convergents_digits(const cfded_digits* digits, size_t depth, cfded_format format,
                                             char** out) {
  REQUIRE(digits, "digits");
  REQUIRE(out, "out");
  return guarded([&] {
    *out = copy_string(cfded::report::convergents_digits(digits->values, digits->kind, depth, format_of(format)));
    return CFDED_OK;
  });
}

cfded_status cfded_report_dedekind(const cfded_surd* surd, size_t depth, cfded_format format, char** out) {
  REQUIRE(surd, "surd");
  REQUIRE(out, "out");
  return guarded([&] {
    *out = copy_string(cfded::report::dedekind(surd->value, depth, format_of(format)));
    return CFDED_OK;
  });
}

cfded_status cfded_report_dedekind_pair(const char* a, const char* b, cfded_format format, char** out) {
  REQUIRE(out, "out");
  return guarded([&] {
    *out = copy_string(cfded::report::dedekind_pair(integer_arg(a), integer_arg(b), format_of(format)));
    return CFDED_OK;
  });
}

cfded_status cfded_report_clusters(const cfded_surd* surd, unsigned precision, cfded_format format, char** out) {
  REQUIRE(surd, "surd");
  REQUIRE(out, "out");
  return guarded([&] {
    *out = copy_string(cfded::report::clusters(surd->value, precision, format_of(format)));
    return CFDED_OK;
  });
}

cfded_status cfded_report_probe(const cfded_surd* surd, size_t periods, const char* tolerance, unsigned precision,
                                cfded_format format, char** out) {
  REQUIRE(surd, "surd");
  REQUIRE(tolerance, "tolerance");
  REQUIRE(out, "out");
  return guarded([&] {
    const auto tol = cfded::Rational::parse(tolerance);
    if (tol.sign() <= 0) cfded::fail(cfded::ErrorCode::InvalidArgument, "tolerance must be positive");
    const auto probe = cfded::convergence_probe(surd->value, periods, tol);
    *out = copy_string(cfded::report::probe(surd->value, probe, precision, format_of(format)));
    try {
      cfded::require_tolerance(probe);
    } catch (const cfded::Error& e) {
      return fail_with(status_of(e.code()), e.what());
    }
    return CFDED_OK;
  });
}

cfded_status cfded_report_verify(cfded_format format, char** out) {
  REQUIRE(out, "out");
  return guarded([&] {
    const auto checks = cfded::run_golden_checks();
    *out = copy_string(cfded::report::verify(checks, format_of(format)));
    std::size_t failed = 0;
    for (const auto& c : checks) failed += c.passed ? 0 : 1;
    if (failed > 0)
      return fail_with(CFDED_ERR_VERIFICATION_FAILED, std::to_string(failed) + " golden check(s) failed");
    return CFDED_OK;
  });
}

}  // extern "C"
