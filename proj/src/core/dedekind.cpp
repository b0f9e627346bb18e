#include "cfded/dedekind.hpp"

#include <string>

#include "cfded/error.hpp"

namespace cfded {

namespace {

int alternating_sign(long exponent) { return exponent % 2 == 0 ? 1 : -1; }

Integer sum_three_minus(std::span<const Integer> digits) {
  Integer total(0);
  for (const auto& d : digits) total += Integer(3) - d;
  return total;
}

}  // namespace

const char* route_name(Route route) noexcept {
  switch (route) {
    case Route::Naive: return "naive";
    case Route::Fast: return "fast";
    case Route::RegularFormula: return "regular_formula";
    case Route::NegativeFormula: return "negative_formula";
  }
  return "unknown";
}

Rational sawtooth(const Rational& x) {
  if (x.is_integer()) return Rational(0);
  return x - Rational(x.floor()) - Rational(Integer(1), Integer(2));
}

namespace {

__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;

}  // namespace

DedekindValue dedekind_naive(const Integer& a, const Integer& b) {
  if (b.sign() <= 0) fail(ErrorCode::InvalidArgument, "Dedekind sum needs b >= 1");
  // ((k/b)) ((ak/b)) = (2k - b)(2r - b) / (4 b^2) with r = ak mod b, for
  // 0 < k < b and r != 0; the k = b term and r = 0 terms vanish.
  // Scaled by 12 this is 3 * sum / b^2.
  Integer sum(0);
  const Integer residue = floor_mod(a, b);
  if (b.fits_long() && b < Integer(1L << 31)) {
    const long bb = b.to_long();
    const unsigned long r = static_cast<unsigned long>(residue.to_long());
    i128 acc = 0;
    for (long k = 1; k < bb; ++k) {
      const long rk = static_cast<long>((r * static_cast<unsigned long>(k)) % static_cast<unsigned long>(bb));
      if (rk == 0) continue;
      acc += static_cast<i128>(2 * k - bb) * static_cast<i128>(2 * rk - bb);
    }
    // |acc| < b^3 < 2^93, split into two 64-bit halves.
    const bool negative = acc < 0;
    u128 mag = negative ? static_cast<u128>(-acc) : static_cast<u128>(acc);
    mpz_class hi(static_cast<unsigned long>(mag >> 64));
    mpz_class lo(static_cast<unsigned long>(mag & ~0UL));
    mpz_class total = (hi << 64) + lo;
    sum = Integer(negative ? mpz_class(-total) : total);
  } else {
    for (Integer k(1); k < b; k += Integer(1)) {
      const Integer rk = floor_mod(residue * k, b);
      if (rk.is_zero()) continue;
      sum += (Integer(2) * k - b) * (Integer(2) * rk - b);
    }
  }
  return {Rational(Integer(3) * sum, b * b), Route::Naive};
}

DedekindValue dedekind_fast(const Integer& a, const Integer& b) {
  if (b.sign() <= 0) fail(ErrorCode::InvalidArgument, "Dedekind sum needs b >= 1");
  if (gcd(a, b) != Integer(1))
    fail(ErrorCode::NotCoprime, "gcd(" + a.to_string() + ", " + b.to_string() + ") != 1");
  Rational total;
  int sign = 1;
  Integer x = floor_mod(a, b);
  Integer y = b;
  // S(x, y) = (x^2 + y^2 + 1)/(x y) - 3 - S(y mod x, x), until y == 1.
  while (y != Integer(1)) {
    Rational term = Rational(x * x + y * y + Integer(1), x * y) - Rational(3);
    total += sign > 0 ? term : -term;
    sign = -sign;
    Integer next = floor_mod(y, x);
    y = std::move(x);
    x = std::move(next);
  }
  return {std::move(total), Route::Fast};
}

Integer regular_constant(const RegularExpansion& expansion) {
  Integer total(0);
  const auto& pre = expansion.preperiod();
  for (std::size_t k = 0; k < pre.size(); ++k) total += alternating_sign(static_cast<long>(k) - 1) > 0 ? pre[k] : -pre[k];
  return total;
}

Integer regular_partial(const RegularExpansion& expansion, std::size_t h) {
  Integer total(0);
  for (std::size_t j = 1; j <= h; ++j) total += j % 2 == 1 ? expansion.b(j) : -expansion.b(j);
  return alternating_sign(expansion.q()) > 0 ? total : -total;
}

Integer regular_drift(const RegularExpansion& expansion) { return regular_partial(expansion, expansion.L()); }

Integer negative_constant(const NegativeExpansion& expansion) { return sum_three_minus(expansion.preperiod()); }

Integer negative_partial(const NegativeExpansion& expansion, std::size_t i) {
  Integer total(0);
  for (std::size_t t = 1; t <= i; ++t) total += Integer(3) - expansion.d(t);
  return total;
}

RegularTerms regular_terms(const RegularExpansion& expansion, std::size_t k) {
  const long q = expansion.q();
  if (static_cast<long>(k) <= q)
    fail(ErrorCode::IndexBeforePeriod, "index " + std::to_string(k) + " lies in the preperiod (q = " +
                                           std::to_string(q) + ")");
  const auto L = static_cast<long>(expansion.L());
  const long offset = static_cast<long>(k) - q - 1;
  const long n = offset / L;
  const auto h = static_cast<std::size_t>(offset % L + 1);

  const auto table = convergents(expansion.digits(), k);
  const auto& cur = table.at(static_cast<long>(k));
  const auto& prev = table.at(static_cast<long>(k) - 1);
  Rational correction = k % 2 == 1 ? Rational(cur.num + prev.den, cur.den) - Rational(3)
                                   : Rational(cur.num - prev.den, cur.den);
  return {n,
          h,
          Rational(regular_constant(expansion)),
          Rational(regular_drift(expansion)),
          Rational(regular_partial(expansion, h)),
          std::move(correction)};
}

DedekindValue dedekind_regular_formula(const RegularExpansion& expansion, std::size_t k) {
  const RegularTerms t = regular_terms(expansion, k);
  return {t.constant + Rational(t.n) * t.drift + t.partial + t.correction, Route::RegularFormula};
}

DedekindValue dedekind_negative_formula(const DigitSequence& negative, std::size_t j) {
  const auto table = convergents(negative, j);
  const auto& cur = table.at(static_cast<long>(j));
  const auto& prev = table.at(static_cast<long>(j) - 1);
  const auto digits = negative.take(j + 1);
  return {Rational(sum_three_minus(digits)) + Rational(cur.num - prev.den, cur.den) - Rational(3),
          Route::NegativeFormula};
}

NegativeTerms negative_terms(const NegativeExpansion& expansion, std::size_t j) {
  const long r = expansion.r();
  if (static_cast<long>(j) <= r)
    fail(ErrorCode::IndexBeforePeriod, "index " + std::to_string(j) + " lies in the preperiod (r = " +
                                           std::to_string(r) + ")");
  const auto m = static_cast<long>(expansion.m());
  const long offset = static_cast<long>(j) - r - 1;
  const long n = offset / m;
  const auto i = static_cast<std::size_t>(offset % m + 1);

  const auto table = convergents(expansion.digits(), j);
  const auto& cur = table.at(static_cast<long>(j));
  const auto& prev = table.at(static_cast<long>(j) - 1);
  return {n,
          i,
          Rational(negative_constant(expansion)),
          Rational(sum_three_minus(expansion.period())),
          Rational(negative_partial(expansion, i)),
          Rational(cur.num - prev.den, cur.den) - Rational(3)};
}

DedekindValue dedekind_negative_formula(const NegativeExpansion& expansion, std::size_t j) {
  if (static_cast<long>(j) <= expansion.r()) return dedekind_negative_formula(expansion.digits(), j);
  const NegativeTerms t = negative_terms(expansion, j);
  return {t.constant + Rational(t.n) * t.drift + t.partial + t.correction, Route::NegativeFormula};
}

}  // namespace cfded
