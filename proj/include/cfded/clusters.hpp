#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cfded/contfrac.hpp"
#include "cfded/rational.hpp"
#include "cfded/surd.hpp"

namespace cfded {

enum class Verdict { DivergesPlus, Bounded, DivergesMinus };

const char* verdict_name(Verdict verdict) noexcept;

/// B (alternating sum over the doubled regular period), D (mean negative
/// period digit) and the resulting growth of S(p_k,q_k) and S(s_j,t_j).
struct AsymptoticReport {
  Integer B;
  Rational D;
  Verdict verdict;
};

/// Throws InternalInvariant if sign(B) != sign(3 - D).
AsymptoticReport classify(const RegularExpansion& regular, const NegativeExpansion& negative);
AsymptoticReport classify(const QuadSurd& z);

enum class Side { U, V };

const char* side_name(Side side) noexcept;

/// A limit of S along one class of convergent indices. U-side values follow
/// the regular period (class h in 1..L), V-side values the negative period
/// (class i in 1..m). Values live in Q(sqrt N) and may be rational.
struct ClusterPoint {
  Side side;
  std::size_t index;
  Number value;
  QuadSurd generator;             // u_h or v_i, always > 1
  std::optional<bool> q_plus_h_odd;  // U-side only
};

/// U_1..U_L. Throws NotBounded unless B == 0.
std::vector<ClusterPoint> cluster_points_U(const RegularExpansion& regular);
/// V_1..V_m. Throws NotBounded unless D == 3.
std::vector<ClusterPoint> cluster_points_V(const NegativeExpansion& negative);

struct CoincidencePair {
  std::size_t i;  // V index
  std::size_t h;  // U index
  Number value;
};

struct CoincidenceReport {
  std::vector<ClusterPoint> U;
  std::vector<ClusterPoint> V;
  std::vector<CoincidencePair> pairs;
  std::vector<std::size_t> u_only;
  std::vector<std::size_t> v_only;
  /// {d_{i+1} : V_i matched} equals {b_1+2, b_3+2, ...} or {b_2+2, b_4+2, ...}.
  bool transition_digits_match;
};

/// Exact comparison of every V_i with every U_h. Throws InternalInvariant if
/// the values are not pairwise distinct on either side, a U_h with q+h even
/// is matched, a V_i with d_{i+1} >= 3 is unmatched, a V_i with d_{i+1} == 2
/// is matched, or the number of pairs differs from L/2. Throws NotBounded.
CoincidenceReport coincidence_analysis(const RegularExpansion& regular, const NegativeExpansion& negative);
CoincidenceReport coincidence_analysis(const QuadSurd& z);

/// Dedekind sums along one class, sampled once per period.
struct ClassProbe {
  Side side;
  std::size_t index;
  std::vector<std::size_t> convergent_indices;  // k (or j) for n = 0, 1, ...
  std::vector<Rational> sums;                   // S at those indices (fast route)
  std::optional<Number> cluster;                // bounded case only
  std::vector<Number> gaps;                     // |S - cluster|, bounded case only
  Rational drift_per_period;                    // exact, from S minus its correction term
  bool monotone_tail;                           // gaps non-increasing over the last 3 periods
};

struct ProbeReport {
  AsymptoticReport classification;
  std::size_t periods;
  Rational tolerance;
  std::vector<ClassProbe> classes;
  /// Largest final gap (bounded case).
  std::optional<Number> worst_gap;
  bool within_tolerance;   // every final gap < tolerance (bounded case)
  bool drift_matches;      // every class drifts by exactly B (U) / m(3-D) (V)
};

/// Samples every U- and V-class for n = 0 .. periods-1 full periods. In the
/// bounded case the gap to the cluster point is tracked; otherwise only the
/// drift is reported. Throws InvalidArgument for periods < 1.
ProbeReport convergence_probe(const QuadSurd& z, std::size_t periods, const Rational& tolerance);

/// Throws ToleranceNotReached (with the achieved gap) unless the probe is
/// within tolerance.
void require_tolerance(const ProbeReport& report);

}  // namespace cfded
