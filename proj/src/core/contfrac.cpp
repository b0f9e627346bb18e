#include "cfded/contfrac.hpp"

#include <map>
#include <string>

#include "cfded/error.hpp"

namespace cfded {

namespace {

// Seeds for index -2 so that index 0 follows from the generic recurrence.
Convergent seed_minus_two(Kind kind) {
  return kind == Kind::Regular ? Convergent{Integer(0), Integer(1)} : Convergent{Integer(0), Integer(-1)};
}

Convergent step(Kind kind, const Integer& digit, const Convergent& prev, const Convergent& prev2) {
  if (kind == Kind::Regular) return {digit * prev.num + prev2.num, digit * prev.den + prev2.den};
  return {digit * prev.num - prev2.num, digit * prev.den - prev2.den};
}

// Final two convergents of a digit block: (last, second to last).
std::pair<Convergent, Convergent> block_map(Kind kind, std::span<const Integer> block) {
  Convergent prev2 = seed_minus_two(kind);
  Convergent prev{Integer(1), Integer(0)};
  for (const auto& digit : block) {
    Convergent next = step(kind, digit, prev, prev2);
    prev2 = std::move(prev);
    prev = std::move(next);
  }
  return {prev, prev2};
}

// Apply x -> (P x + P') / (Q x + Q') (regular) or (P x - P') / (Q x - Q').
Number apply_block(Kind kind, const std::pair<Convergent, Convergent>& map, const Number& x) {
  const auto& [last, before] = map;
  if (kind == Kind::Regular)
    return (Number(last.num) * x + Number(before.num)) / (Number(last.den) * x + Number(before.den));
  return (Number(last.num) * x - Number(before.num)) / (Number(last.den) * x - Number(before.den));
}

std::string digits_to_string(std::span<const Integer> digits) {
  std::string out;
  for (const auto& d : digits) out += (out.empty() ? "" : ",") + d.to_string();
  return "(" + out + ")";
}

template <class Digit, class Next>
std::tuple<std::vector<Integer>, std::vector<Integer>, std::vector<QuadSurd>> run_expansion(
    const QuadSurd& z, Digit digit_of, Next next_of) {
  std::map<QuadSurd, std::size_t, SurdFieldLess> seen;
  std::vector<QuadSurd> quotients;
  std::vector<Integer> digits;
  QuadSurd current = z;
  for (std::size_t index = 0;; ++index) {
    if (index >= kMaxExpansionSteps)
      fail(ErrorCode::IterationLimit, "no period found within " + std::to_string(kMaxExpansionSteps) + " steps");
    if (const auto it = seen.find(current); it != seen.end()) {
      const auto start = static_cast<std::ptrdiff_t>(it->second);
      std::vector<Integer> preperiod(digits.begin(), digits.begin() + start);
      std::vector<Integer> period(digits.begin() + start, digits.end());
      return {std::move(preperiod), std::move(period), std::move(quotients)};
    }
    seen.emplace(current, index);
    quotients.push_back(current);
    Integer digit = digit_of(current);
    QuadSurd next = next_of(current, digit);
    digits.push_back(std::move(digit));
    current = std::move(next);
  }
}

}  // namespace

const char* kind_name(Kind kind) noexcept { return kind == Kind::Regular ? "regular" : "negative"; }

DigitSequence::DigitSequence(Kind kind, std::vector<Integer> preperiod, std::vector<Integer> period)
    : kind_(kind), preperiod_(std::move(preperiod)), period_(std::move(period)) {}

const Integer& DigitSequence::operator[](std::size_t index) const {
  if (index < preperiod_.size()) return preperiod_[index];
  if (period_.empty())
    fail(ErrorCode::IndexOutOfRange,
         "digit index " + std::to_string(index) + " beyond the " + std::to_string(preperiod_.size()) +
             " available digits");
  return period_[(index - preperiod_.size()) % period_.size()];
}

std::vector<Integer> DigitSequence::take(std::size_t count) const {
  std::vector<Integer> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count && has(i); ++i) out.push_back((*this)[i]);
  return out;
}

PeriodicExpansion::PeriodicExpansion(QuadSurd value, DigitSequence digits, std::vector<QuadSurd> quotients)
    : value_(std::move(value)), digits_(std::move(digits)), quotients_(std::move(quotients)) {}

const QuadSurd& PeriodicExpansion::complete_quotient(std::size_t index) const {
  const std::size_t pre = preperiod().size();
  if (index < pre) return quotients_[index];
  return quotients_[pre + (index - pre) % period().size()];
}

RegularExpansion expand_regular(const QuadSurd& z) {
  auto [pre, per, quotients] = run_expansion(
      z, [](const QuadSurd& x) { return x.floor(); },
      [](const QuadSurd& x, const Integer& a) { return inverse(Number(x) - Number(a)).surd(); });
  return RegularExpansion(z, DigitSequence(Kind::Regular, std::move(pre), std::move(per)), std::move(quotients));
}

NegativeExpansion expand_negative(const QuadSurd& z) {
  auto [pre, per, quotients] = run_expansion(
      z, [](const QuadSurd& x) { return x.ceil(); },
      [](const QuadSurd& x, const Integer& c) { return inverse(Number(c) - Number(x)).surd(); });
  for (std::size_t i = 1; i < pre.size(); ++i) {
    if (pre[i] < Integer(2)) fail(ErrorCode::InternalInvariant, "negative digit below 2 at index " + std::to_string(i));
  }
  bool has_large = false;
  for (const auto& d : per) {
    if (d < Integer(2)) fail(ErrorCode::InternalInvariant, "negative period digit below 2");
    has_large = has_large || d >= Integer(3);
  }
  if (!has_large) fail(ErrorCode::InternalInvariant, "negative period consists of 2s only");

  // Align the period start with the image of the regular preperiod.
  const auto regular_pre = expand_regular(z).preperiod();
  std::size_t aligned = 0;
  for (std::size_t i = 0; i < regular_pre.size(); ++i)
    aligned += (i % 2 == 1) ? static_cast<std::size_t>(regular_pre[i].to_long() - 1) : 1;
  if (aligned > pre.size()) {
    const std::size_t shift = aligned - pre.size();
    const std::size_t m = per.size();
    const std::size_t old_pre = pre.size();
    std::vector<Integer> rotated;
    rotated.reserve(m);
    for (std::size_t t = 0; t < m; ++t) rotated.push_back(per[(shift + t) % m]);
    for (std::size_t t = 0; t < shift; ++t) pre.push_back(per[t % m]);
    std::vector<QuadSurd> extended(quotients.begin(), quotients.begin() + static_cast<std::ptrdiff_t>(old_pre));
    for (std::size_t t = 0; t < shift + m; ++t) extended.push_back(quotients[old_pre + t % m]);
    per = std::move(rotated);
    quotients = std::move(extended);
  }
  return NegativeExpansion(z, DigitSequence(Kind::Negative, std::move(pre), std::move(per)), std::move(quotients));
}

ConvergentTable::ConvergentTable(Kind kind, std::vector<Convergent> entries)
    : kind_(kind), entries_(std::move(entries)) {}

const Convergent& ConvergentTable::at(long index) const {
  if (index < -1 || index > last_index())
    fail(ErrorCode::IndexOutOfRange, "convergent index " + std::to_string(index) + " outside -1.." +
                                         std::to_string(last_index()));
  return entries_[static_cast<std::size_t>(index + 1)];
}

ConvergentTable convergents(const DigitSequence& digits, std::size_t n) {
  if (!digits.has(n))
    fail(ErrorCode::IndexOutOfRange, "need " + std::to_string(n + 1) + " digits, have " +
                                         std::to_string(digits.finite_size()));
  const Kind kind = digits.kind();
  std::vector<Convergent> entries;
  entries.reserve(n + 2);
  Convergent prev2 = seed_minus_two(kind);
  entries.push_back({Integer(1), Integer(0)});
  for (std::size_t k = 0; k <= n; ++k) {
    Convergent next = step(kind, digits[k], entries.back(), prev2);
    prev2 = entries.back();
    entries.push_back(std::move(next));
  }
  return ConvergentTable(kind, std::move(entries));
}

std::vector<Integer> transition_prefix(std::span<const Integer> regular) {
  if (regular.empty()) fail(ErrorCode::EmptyInput, "transition needs at least one regular digit");
  for (std::size_t i = 1; i < regular.size(); ++i) {
    if (regular[i] < Integer(1))
      fail(ErrorCode::InvalidArgument, "regular digit a_" + std::to_string(i) + " must be >= 1");
  }
  std::vector<Integer> out;
  // The group of the last digit is withheld.
  for (std::size_t i = 0; i + 1 < regular.size(); ++i) {
    if (i == 0) {
      out.push_back(regular[0] + Integer(1));
    } else if (i % 2 == 1) {
      for (Integer t(1); t < regular[i]; t += Integer(1)) out.emplace_back(2);
    } else {
      out.push_back(regular[i] + Integer(2));
    }
  }
  return out;
}

bool is_floor_convergent(const DigitSequence& negative, std::size_t j) {
  if (j < 1) fail(ErrorCode::IndexOutOfRange, "the convergent criterion needs j >= 1");
  return negative[j + 1] >= Integer(3);
}

LegendreWitness legendre_witness(const NegativeExpansion& expansion, std::size_t j) {
  if (j < 1) fail(ErrorCode::IndexOutOfRange, "the Legendre witness needs j >= 1");
  const auto table = convergents(expansion.digits(), j);
  const auto& cur = table.at(static_cast<long>(j));
  const auto& prev = table.at(static_cast<long>(j) - 1);
  const Number z_next = expansion.complete_quotient(j + 1);
  Number lhs = Number(cur.den) / (z_next * Number(cur.den) - Number(prev.den));
  Integer inverse = mod_inverse(cur.num, cur.den);
  Rational rhs(cur.den, cur.den + inverse);
  const bool holds = lhs < Number(rhs);
  return {std::move(lhs), std::move(rhs), std::move(inverse), holds};
}

std::optional<long> regular_convergent_index(const DigitSequence& regular, const Integer& num,
                                             const Integer& den) {
  Convergent prev2 = seed_minus_two(Kind::Regular);
  Convergent prev{Integer(1), Integer(0)};
  for (std::size_t k = 0; regular.has(k); ++k) {
    Convergent cur = step(Kind::Regular, regular[k], prev, prev2);
    if (cur.num == num && cur.den == den) return static_cast<long>(k);
    if (cur.den > den) return std::nullopt;
    prev2 = std::move(prev);
    prev = std::move(cur);
  }
  fail(ErrorCode::IndexOutOfRange, "regular digits exhausted before reaching denominator " + den.to_string());
}

IntercalaryForm intercalary_decompose(const DigitSequence& regular, const DigitSequence& negative,
                                      std::size_t j) {
  const auto table = convergents(negative, j);
  const Convergent& target = table.at(static_cast<long>(j));
  Convergent prev2 = seed_minus_two(Kind::Regular);
  Convergent prev{Integer(1), Integer(0)};
  for (std::size_t k = 0; regular.has(k); ++k) {
    Convergent cur = step(Kind::Regular, regular[k], prev, prev2);
    if (cur.num == target.num && cur.den == target.den) return {true, static_cast<long>(k), Integer(0)};
    if (cur.den > target.den) break;
    if (!regular.has(k + 1))
      fail(ErrorCode::IndexOutOfRange, "regular digits exhausted while decomposing s_" + std::to_string(j));
    // Ladder between p_k/q_k and p_{k+1}/q_{k+1}: denominators i q_k + q_{k-1}.
    const Integer gap = target.den - prev.den;
    if (gap.sign() > 0 && divides(cur.den, gap)) {
      const Integer i = div_exact(gap, cur.den);
      if (i >= Integer(1) && i < regular[k + 1] && i * cur.num + prev.num == target.num)
        return {false, static_cast<long>(k), i};
    }
    prev2 = std::move(prev);
    prev = std::move(cur);
  }
  fail(ErrorCode::NotFound, "s_" + std::to_string(j) + "/t_" + std::to_string(j) +
                                " is neither a convergent nor an intercalary fraction");
}

QuadSurd evaluate_purely_periodic(Kind kind, std::span<const Integer> period,
                                  const std::optional<Integer>& radicand_hint) {
  if (period.empty()) fail(ErrorCode::InvalidPeriod, "empty period");
  if (kind == Kind::Regular) {
    for (const auto& d : period)
      if (d < Integer(1)) fail(ErrorCode::InvalidPeriod, "regular period digits must be >= 1: " + digits_to_string(period));
  } else {
    bool has_large = false;
    for (const auto& d : period) {
      if (d < Integer(2)) fail(ErrorCode::InvalidPeriod, "negative period digits must be >= 2: " + digits_to_string(period));
      has_large = has_large || d >= Integer(3);
    }
    if (!has_large) fail(ErrorCode::InvalidPeriod, "negative period of 2s only: " + digits_to_string(period));
  }

  const auto [last, before] = block_map(kind, period);
  // Regular: Q x^2 - (P - Q') x - P' = 0.  Negative: T x^2 - (S + T') x + S' = 0.
  const Integer& lead = last.den;
  const Integer linear = kind == Kind::Regular ? last.num - before.den : last.num + before.den;
  const Integer constant = kind == Kind::Regular ? -before.num : before.num;
  const Integer discriminant = linear * linear - Integer(4) * lead * constant;

  Integer outer;
  Integer inner;
  if (radicand_hint && divides(*radicand_hint, discriminant) &&
      is_perfect_square(div_exact(discriminant, *radicand_hint))) {
    outer = isqrt(div_exact(discriminant, *radicand_hint));
    inner = *radicand_hint;
  } else {
    auto split = square_free_split(discriminant);
    if (split.inner == Integer(1))
      fail(ErrorCode::InternalInvariant, "periodic fixed point is rational for " + digits_to_string(period));
    outer = std::move(split.outer);
    inner = std::move(split.inner);
  }

  const Integer& first = period.front();
  const Number low = kind == Kind::Regular ? Number(first) : Number(first - Integer(1));
  const Number high = low + Number(1);
  for (const int branch : {1, -1}) {
    Number root = Number::from_parts(linear, Integer(branch) * outer, Integer(2) * lead, inner);
    if (root > low && root < high) return root.surd();
  }
  fail(ErrorCode::InternalInvariant, "no fixed point in the digit bracket for " + digits_to_string(period));
}

QuadSurd evaluate_periodic(Kind kind, std::span<const Integer> preperiod, std::span<const Integer> period) {
  const QuadSurd tail = evaluate_purely_periodic(kind, period);
  if (preperiod.empty()) return tail;
  return apply_block(kind, block_map(kind, preperiod), Number(tail)).surd();
}

}  // namespace cfded
