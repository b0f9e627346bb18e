#pragma once

#include <cstddef>

#include "cfded/contfrac.hpp"
#include "cfded/integer.hpp"
#include "cfded/rational.hpp"

namespace cfded {

// Dedekind sums are handled in the scaled form S(a, b) = 12 s(a, b).

enum class Route { Naive, Fast, RegularFormula, NegativeFormula };

const char* route_name(Route route) noexcept;

struct DedekindValue {
  Rational value;
  Route route;
};

/// ((x)) = x - floor(x) - 1/2, and 0 at integers.
Rational sawtooth(const Rational& x);

/// 12 * sum_{k=1}^{b} ((k/b)) ((a k / b)). O(b); any a, b >= 1.
DedekindValue dedekind_naive(const Integer& a, const Integer& b);

/// Euclidean recursion on the reciprocity law
/// S(a,b) + S(b,a) = (a^2 + b^2 + 1)/(ab) - 3. Throws NotCoprime.
DedekindValue dedekind_fast(const Integer& a, const Integer& b);

/// S(p_k, q_k) assembled from the regular period data: for
/// k = q + nL + h (h in 1..L),
///   A + nB + (-1)^q sum_{j<=h} (-1)^{j-1} b_j + corr_k,
/// corr_k = (p_k + q_{k-1})/q_k - 3 for odd k, (p_k - q_{k-1})/q_k for even k.
/// Throws IndexBeforePeriod for k <= q.
DedekindValue dedekind_regular_formula(const RegularExpansion& expansion, std::size_t k);

/// S(s_j, t_j) = sum_{k=0}^{j} (3 - c_k) + (s_j - t_{j-1})/t_j - 3.
/// Works on any digit sequence with at least j + 1 digits.
DedekindValue dedekind_negative_formula(const DigitSequence& negative, std::size_t j);
/// Same value via the period decomposition j = r + nm + i:
///   C + nm(3 - D) + sum_{t<=i} (3 - d_t) + (s_j - t_{j-1})/t_j - 3
/// (the direct sum is used for j <= r).
DedekindValue dedekind_negative_formula(const NegativeExpansion& expansion, std::size_t j);

/// Pieces of the regular formula, exposed for the asymptotic analysis.
struct RegularTerms {
  long n;                 // period count
  std::size_t h;          // class index in 1..L
  Rational constant;      // A
  Rational drift;         // B (per period)
  Rational partial;       // (-1)^q sum_{j<=h} (-1)^{j-1} b_j
  Rational correction;    // corr_k
};

RegularTerms regular_terms(const RegularExpansion& expansion, std::size_t k);

struct NegativeTerms {
  long n;                 // period count (-1 inside the preperiod)
  std::size_t i;          // class index in 1..m (0 inside the preperiod)
  Rational constant;      // C
  Rational drift;         // m (3 - D) (per period)
  Rational partial;       // sum_{t<=i} (3 - d_t)
  Rational correction;    // (s_j - t_{j-1})/t_j - 3
};

/// Requires j > r.
NegativeTerms negative_terms(const NegativeExpansion& expansion, std::size_t j);

/// A = sum_{k=0}^{q} (-1)^{k-1} a_k (0 when purely periodic).
Integer regular_constant(const RegularExpansion& expansion);
/// B = (-1)^q sum_{j=1}^{L} (-1)^{j-1} b_j.
Integer regular_drift(const RegularExpansion& expansion);
/// C = sum_{j=0}^{r} (3 - c_j) (0 when purely periodic).
Integer negative_constant(const NegativeExpansion& expansion);
/// (-1)^q sum_{j=1}^{h} (-1)^{j-1} b_j.
Integer regular_partial(const RegularExpansion& expansion, std::size_t h);
/// sum_{t=1}^{i} (3 - d_t).
Integer negative_partial(const NegativeExpansion& expansion, std::size_t i);

}  // namespace cfded
