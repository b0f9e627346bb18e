#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cfded/integer.hpp"
#include "cfded/rational.hpp"
#include "cfded/surd.hpp"

namespace cfded {

/// Which continued fraction algorithm produced a digit sequence: the regular
/// one (floor, z' = 1/(z - a)) or the negative regular one (ceiling,
/// z' = 1/(c - z)).
enum class Kind { Regular, Negative };

const char* kind_name(Kind kind) noexcept;

/// A digit sequence: a preperiod followed by an optional repeating period.
/// An empty period means the sequence is finite (e.g. a user-supplied digit
/// prefix of a non-quadratic number).
class DigitSequence {
 public:
  DigitSequence(Kind kind, std::vector<Integer> preperiod, std::vector<Integer> period = {});

  Kind kind() const noexcept { return kind_; }
  const std::vector<Integer>& preperiod() const noexcept { return preperiod_; }
  const std::vector<Integer>& period() const noexcept { return period_; }

  bool is_periodic() const noexcept { return !period_.empty(); }
  bool has(std::size_t index) const noexcept { return is_periodic() || index < preperiod_.size(); }
  /// Number of available digits; only meaningful for finite sequences.
  std::size_t finite_size() const noexcept { return preperiod_.size(); }

  /// Digit at `index`, reading the period cyclically. Throws IndexOutOfRange
  /// past the end of a finite sequence.
  const Integer& operator[](std::size_t index) const;
  std::vector<Integer> take(std::size_t count) const;

 private:
  Kind kind_;
  std::vector<Integer> preperiod_;
  std::vector<Integer> period_;
};

/// Exact expansion of a quadratic irrational: minimal period, minimal
/// preperiod for that period, and the complete quotients z_0 .. z_{pre+per-1}.
class PeriodicExpansion {
 public:
  const QuadSurd& value() const noexcept { return value_; }
  const DigitSequence& digits() const noexcept { return digits_; }
  const std::vector<Integer>& preperiod() const noexcept { return digits_.preperiod(); }
  const std::vector<Integer>& period() const noexcept { return digits_.period(); }
  const Integer& digit(std::size_t index) const { return digits_[index]; }

  /// z_index, read cyclically once inside the period.
  const QuadSurd& complete_quotient(std::size_t index) const;

 protected:
  PeriodicExpansion(QuadSurd value, DigitSequence digits, std::vector<QuadSurd> quotients);

 private:
  QuadSurd value_;
  DigitSequence digits_;
  std::vector<QuadSurd> quotients_;
};

class RegularExpansion : public PeriodicExpansion {
 public:
  RegularExpansion(QuadSurd value, DigitSequence digits, std::vector<QuadSurd> quotients)
      : PeriodicExpansion(std::move(value), std::move(digits), std::move(quotients)) {}

  /// Index of the last preperiod digit; -1 when purely periodic.
  long q() const noexcept { return static_cast<long>(preperiod().size()) - 1; }
  std::size_t l() const noexcept { return period().size(); }
  /// l when l is even, 2l otherwise.
  std::size_t L() const noexcept { return l() % 2 == 0 ? l() : 2 * l(); }
  /// b_j for 1 <= j, cyclic in the period.
  const Integer& b(std::size_t j) const { return period()[(j - 1) % l()]; }
};

class NegativeExpansion : public PeriodicExpansion {
 public:
  NegativeExpansion(QuadSurd value, DigitSequence digits, std::vector<QuadSurd> quotients)
      : PeriodicExpansion(std::move(value), std::move(digits), std::move(quotients)) {}

  /// Index of the last preperiod digit; -1 when purely periodic.
  long r() const noexcept { return static_cast<long>(preperiod().size()) - 1; }
  std::size_t m() const noexcept { return period().size(); }
  /// d_i for 1 <= i, cyclic in the period.
  const Integer& d(std::size_t i) const { return period()[(i - 1) % m()]; }
};

/// Iteration cap for period detection.
inline constexpr std::size_t kMaxExpansionSteps = 1'000'000;

RegularExpansion expand_regular(const QuadSurd& z);
/// The period is found by first recurrence of a complete quotient; its start
/// is then moved forward, if needed, so that the preperiod covers the image
/// c_0 = a_0 + 1, 2^(a_1 - 1), a_2 + 2, ... of the regular preperiod. Thus
/// 1/sqrt(53) gives <1, 2^6; (5, 3, ..., 2^13)> rather than <1; (2^6, ...)>.
/// Throws InternalInvariant if a digit below 2 appears after c_0 or the
/// detected period has no digit >= 3.
NegativeExpansion expand_negative(const QuadSurd& z);

struct Convergent {
  Integer num;
  Integer den;
  Rational value() const { return Rational(num, den); }
};

/// Convergents p_k/q_k (regular) or s_j/t_j (negative) for k = -1 .. last.
class ConvergentTable {
 public:
  ConvergentTable(Kind kind, std::vector<Convergent> entries);

  Kind kind() const noexcept { return kind_; }
  long last_index() const noexcept { return static_cast<long>(entries_.size()) - 2; }
  /// Entry for -1 <= index <= last_index(); throws IndexOutOfRange.
  const Convergent& at(long index) const;

 private:
  Kind kind_;
  std::vector<Convergent> entries_;
};

/// Convergents of indices -1 .. n. Throws IndexOutOfRange when a finite
/// sequence has fewer than n + 1 digits.
ConvergentTable convergents(const DigitSequence& digits, std::size_t n);

/// Negative digits implied by a finite regular prefix a_0..a_n. The group
/// produced by a_n is withheld, so the result is always a prefix of the true
/// negative expansion. Throws EmptyInput, InvalidArgument (a_i < 1, i >= 1).
std::vector<Integer> transition_prefix(std::span<const Integer> regular);

/// True iff s_j/t_j is also a regular convergent, i.e. c_{j+1} >= 3.
/// Throws IndexOutOfRange for j < 1 or when c_{j+1} is unavailable.
bool is_floor_convergent(const DigitSequence& negative, std::size_t j);

/// Both sides of the Legendre-type test for s_j/t_j:
/// lhs = t_j / (z_{j+1} t_j - t_{j-1}),  rhs = t_j / (t_j + s*), where s* is
/// the inverse of s_j modulo t_j. `holds` is lhs < rhs.
struct LegendreWitness {
  Number lhs;
  Rational rhs;
  Integer inverse;
  bool holds;
};

LegendreWitness legendre_witness(const NegativeExpansion& expansion, std::size_t j);

/// Index k with p_k/q_k == num/den (num/den in lowest terms), scanning the
/// regular convergents until the denominators pass `den`.
std::optional<long> regular_convergent_index(const DigitSequence& regular,
                                             const Integer& num, const Integer& den);

/// s_j/t_j as either a regular convergent p_k/q_k or the intercalary fraction
/// (i p_k + p_{k-1}) / (i q_k + q_{k-1}) with 1 <= i < a_{k+1}.
struct IntercalaryForm {
  bool exact_convergent;
  long k;
  Integer multiple;  // 0 for exact convergents
};

IntercalaryForm intercalary_decompose(const DigitSequence& regular,
                                      const DigitSequence& negative, std::size_t j);

/// The purely periodic number with the given period, as the root of the fixed
/// point equation of one period's Moebius map lying in (d_1, d_1 + 1)
/// (regular) or (d_1 - 1, d_1) (negative). `radicand_hint` lets callers who
/// know the field skip the square-free factorization. Throws InvalidPeriod.
QuadSurd evaluate_purely_periodic(Kind kind, std::span<const Integer> period,
                                  const std::optional<Integer>& radicand_hint = std::nullopt);

/// The number with the given preperiod and non-empty period.
QuadSurd evaluate_periodic(Kind kind, std::span<const Integer> preperiod,
                           std::span<const Integer> period);

}  // namespace cfded
