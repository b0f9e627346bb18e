/* C interface to the cfded library: exact continued fraction expansions of
 * real quadratic irrationals, Dedekind sums along their convergents, and the
 * cluster points of bounded Dedekind-sum sequences.
 *
 * Conventions
 *   - Every fallible call returns a cfded_status; CFDED_OK is 0.
 *   - On failure, cfded_last_error() describes the problem for the calling
 *     thread until its next failing call.
 *   - Integers cross the boundary as decimal strings, rationals as "n" or
 *     "n/d". Strings returned through char** are owned by the caller and must
 *     be released with cfded_string_free().
 *   - Handles are immutable once created and may be shared between threads.
 */
#ifndef CFDED_CFDED_H
#define CFDED_CFDED_H

#include <stddef.h>

#if defined(_WIN32)
#  define CFDED_API __declspec(dllexport)
#else
#  define CFDED_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cfded_status {
  CFDED_OK = 0,
  CFDED_ERR_INVALID_ARGUMENT = 1,
  CFDED_ERR_SYNTAX = 2,
  CFDED_ERR_ZERO_DENOMINATOR = 3,
  CFDED_ERR_DIVISION_BY_ZERO = 4,
  CFDED_ERR_PERFECT_SQUARE = 5,
  CFDED_ERR_UNSUPPORTED_RADICAND = 6,
  CFDED_ERR_MIXED_RADICAND = 7,
  CFDED_ERR_RATIONAL_VALUE = 8,
  CFDED_ERR_INDEX_OUT_OF_RANGE = 9,
  CFDED_ERR_INDEX_BEFORE_PERIOD = 10,
  CFDED_ERR_INVALID_PERIOD = 11,
  CFDED_ERR_NOT_COPRIME = 12,
  CFDED_ERR_NOT_BOUNDED = 13,
  CFDED_ERR_NOT_FOUND = 14,
  CFDED_ERR_TOLERANCE_NOT_REACHED = 15,
  CFDED_ERR_ITERATION_LIMIT = 16,
  CFDED_ERR_EMPTY_INPUT = 17,
  CFDED_ERR_INTERNAL = 18,
  CFDED_ERR_VERIFICATION_FAILED = 19,
  CFDED_ERR_OUT_OF_MEMORY = 20
} cfded_status;

typedef enum cfded_kind { CFDED_REGULAR = 0, CFDED_NEGATIVE = 1 } cfded_kind;

typedef enum cfded_format { CFDED_FORMAT_TEXT = 0, CFDED_FORMAT_JSON = 1 } cfded_format;

typedef enum cfded_route {
  CFDED_ROUTE_NAIVE = 0,
  CFDED_ROUTE_FAST = 1
} cfded_route;

/* Opaque handles. */
typedef struct cfded_surd cfded_surd;           /* (a + b*sqrt(N)) / c */
typedef struct cfded_expansion cfded_expansion; /* periodic expansion of a surd */
typedef struct cfded_digits cfded_digits;       /* finite digit list */

CFDED_API const char* cfded_version(void);
CFDED_API const char* cfded_status_name(cfded_status status);
CFDED_API const char* cfded_last_error(void);
CFDED_API void cfded_string_free(char* text);

/* ---- surds ------------------------------------------------------------- */

/* Parses e.g. "1/sqrt(53)" or "(1+sqrt(5))/2". */
CFDED_API cfded_status cfded_surd_parse(const char* text, cfded_surd** out);
/* Normalizes (a + b*sqrt(n)) / c. */
CFDED_API cfded_status cfded_surd_from_parts(const char* a, const char* b, const char* c, const char* n,
                                             cfded_surd** out);
CFDED_API void cfded_surd_free(cfded_surd* surd);
/* Canonical fields; any output pointer may be NULL. */
CFDED_API cfded_status cfded_surd_parts(const cfded_surd* surd, char** a, char** b, char** c, char** n);
CFDED_API cfded_status cfded_surd_expression(const cfded_surd* surd, char** out);
CFDED_API cfded_status cfded_surd_decimal(const cfded_surd* surd, unsigned digits, char** out);
/* *out is -1, 0 or 1. */
CFDED_API cfded_status cfded_surd_compare(const cfded_surd* x, const cfded_surd* y, int* out);
CFDED_API cfded_status cfded_surd_floor(const cfded_surd* surd, char** out);

/* ---- expansions -------------------------------------------------------- */

CFDED_API cfded_status cfded_expand(const cfded_surd* surd, cfded_kind kind, cfded_expansion** out);
CFDED_API void cfded_expansion_free(cfded_expansion* expansion);
CFDED_API cfded_kind cfded_expansion_kind(const cfded_expansion* expansion);
CFDED_API size_t cfded_expansion_preperiod_length(const cfded_expansion* expansion);
CFDED_API size_t cfded_expansion_period_length(const cfded_expansion* expansion);
/* Digit at position `index` of the unrolled expansion. */
CFDED_API cfded_status cfded_expansion_digit(const cfded_expansion* expansion, size_t index, char** out);
/* Convergent numerator/denominator at index >= -1. */
CFDED_API cfded_status cfded_expansion_convergent(const cfded_expansion* expansion, long index, char** num,
                                                  char** den);
/* Negative expansions only: whether s_j/t_j is a regular convergent (j >= 1). */
CFDED_API cfded_status cfded_expansion_is_floor_convergent(const cfded_expansion* expansion, size_t j, int* out);
/* Negative expansions only: the Legendre-type witness for s_j/t_j. */
CFDED_API cfded_status cfded_expansion_legendre(const cfded_expansion* expansion, size_t j, int* holds);

/* ---- finite digit lists ------------------------------------------------ */

/* Comma separated, "2^7" repeats; e.g. "2,1,2,1,1,4". */
CFDED_API cfded_status cfded_digits_parse(const char* text, cfded_kind kind, cfded_digits** out);
CFDED_API void cfded_digits_free(cfded_digits* digits);
CFDED_API cfded_kind cfded_digits_kind(const cfded_digits* digits);
CFDED_API size_t cfded_digits_length(const cfded_digits* digits);
CFDED_API cfded_status cfded_digits_at(const cfded_digits* digits, size_t index, char** out);
/* Regular -> negative: the determined prefix of the transition. */
CFDED_API cfded_status cfded_digits_transition(const cfded_digits* regular, cfded_digits** out);

/* ---- Dedekind sums ----------------------------------------------------- */

/* S(a, b) = 12 s(a, b) as "n/d". The fast route needs gcd(a, b) = 1. */
CFDED_API cfded_status cfded_dedekind(const char* a, const char* b, cfded_route route, char** out);

/* ---- reports (the CLI's commands) -------------------------------------- */

/* kinds_mask: bit 0 regular, bit 1 negative. */
CFDED_API cfded_status cfded_report_expand(const cfded_surd* surd, unsigned kinds_mask, size_t depth,
                                           cfded_format format, char** out);
CFDED_API cfded_status cfded_report_expand_digits(const cfded_digits* digits, cfded_format format, char** out);
CFDED_API cfded_status cfded_report_convergents(const cfded_surd* surd, size_t depth, cfded_format format,
                                                char** out);
CFDED_API cfded_status cfded_report_convergents_digits(const cfded_digits* digits, size_t depth,
                                                       cfded_format format, char** out);
CFDED_API cfded_status cfded_report_dedekind(const cfded_surd* surd, size_t depth, cfded_format format,
                                             char** out);
CFDED_API cfded_status cfded_report_dedekind_pair(const char* a, const char* b, cfded_format format, char** out);
CFDED_API cfded_status cfded_report_clusters(const cfded_surd* surd, unsigned precision, cfded_format format,
                                             char** out);
/* Writes the report even when the tolerance is missed; the status is then
 * CFDED_ERR_TOLERANCE_NOT_REACHED. `tolerance` accepts "1e-6" or "1/1000000". */
CFDED_API cfded_status cfded_report_probe(const cfded_surd* surd, size_t periods, const char* tolerance,
                                          unsigned precision, cfded_format format, char** out);
/* Golden fixtures; CFDED_ERR_VERIFICATION_FAILED if any check fails (the
 * report is written either way). */
CFDED_API cfded_status cfded_report_verify(cfded_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* CFDED_CFDED_H */
