#include "cfded/clusters.hpp"

#include <algorithm>
#include <string>

#include "cfded/dedekind.hpp"
#include "cfded/error.hpp"

namespace cfded {

namespace {

// Digits x_k, x_{k-1}, ..., x_1, x_n, ..., x_{k+1} of a period of length n.
template <class DigitAt>
std::vector<Integer> reversed_rotation(std::size_t k, std::size_t n, DigitAt digit_at) {
  std::vector<Integer> out;
  out.reserve(n);
  for (std::size_t t = 0; t < n; ++t) out.push_back(digit_at((k + n - 1 - t) % n + 1));
  return out;
}

Number absolute(const Number& x) { return x.sign() < 0 ? -x : x; }

std::string point_name(Side side, std::size_t index) {
  return std::string(side_name(side)) + "_" + std::to_string(index);
}

void require_distinct(const std::vector<ClusterPoint>& points) {
  for (std::size_t x = 0; x < points.size(); ++x) {
    for (std::size_t y = x + 1; y < points.size(); ++y) {
      if (points[x].value == points[y].value)
        fail(ErrorCode::InternalInvariant, point_name(points[x].side, points[x].index) + " and " +
                                               point_name(points[y].side, points[y].index) + " coincide");
    }
  }
}

}  // namespace

const char* verdict_name(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::DivergesPlus: return "diverges_plus";
    case Verdict::Bounded: return "bounded";
    case Verdict::DivergesMinus: return "diverges_minus";
  }
  return "unknown";
}

const char* side_name(Side side) noexcept { return side == Side::U ? "U" : "V"; }

AsymptoticReport classify(const RegularExpansion& regular, const NegativeExpansion& negative) {
  Integer B = regular_drift(regular);
  Integer digit_sum(0);
  for (const auto& d : negative.period()) digit_sum += d;
  Rational D(digit_sum, Integer(static_cast<long>(negative.m())));
  const int from_b = B.sign();
  const int from_d = (Rational(3) - D).sign();
  if (from_b != from_d)
    fail(ErrorCode::InternalInvariant, "sign(B) = " + std::to_string(from_b) + " but sign(3 - D) = " +
                                           std::to_string(from_d) + " for " + regular.value().to_expression());
  const Verdict verdict = from_b > 0 ? Verdict::DivergesPlus : (from_b == 0 ? Verdict::Bounded : Verdict::DivergesMinus);
  return {std::move(B), std::move(D), verdict};
}

AsymptoticReport classify(const QuadSurd& z) { return classify(expand_regular(z), expand_negative(z)); }

std::vector<ClusterPoint> cluster_points_U(const RegularExpansion& regular) {
  if (!regular_drift(regular).is_zero())
    fail(ErrorCode::NotBounded, "B != 0: S(p_k, q_k) is unbounded for " + regular.value().to_expression());
  const Number z = regular.value();
  const Integer& radicand = regular.value().radicand();
  const Number A = regular_constant(regular);
  const std::size_t L = regular.L();
  std::vector<ClusterPoint> out;
  out.reserve(L);
  for (std::size_t h = 1; h <= L; ++h) {
    const auto digits = reversed_rotation(h, L, [&](std::size_t j) { return regular.b(j); });
    QuadSurd u = evaluate_purely_periodic(Kind::Regular, digits, radicand);
    const bool odd = (regular.q() + static_cast<long>(h)) % 2 != 0;
    const Number tail = odd ? z + inverse(Number(u)) - Number(3) : z - inverse(Number(u));
    Number value = A + Number(regular_partial(regular, h)) + tail;
    out.push_back({Side::U, h, std::move(value), std::move(u), odd});
  }
  return out;
}

std::vector<ClusterPoint> cluster_points_V(const NegativeExpansion& negative) {
  if (!negative_partial(negative, negative.m()).is_zero())
    fail(ErrorCode::NotBounded, "D != 3: S(s_j, t_j) is unbounded for " + negative.value().to_expression());
  const Number z = negative.value();
  const Integer& radicand = negative.value().radicand();
  const Number C = negative_constant(negative);
  const std::size_t m = negative.m();
  std::vector<ClusterPoint> out;
  out.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) {
    const auto digits = reversed_rotation(i, m, [&](std::size_t t) { return negative.d(t); });
    QuadSurd v = evaluate_purely_periodic(Kind::Negative, digits, radicand);
    Number value = C + Number(negative_partial(negative, i)) + z - inverse(Number(v)) - Number(3);
    out.push_back({Side::V, i, std::move(value), std::move(v), std::nullopt});
  }
  return out;
}

CoincidenceReport coincidence_analysis(const RegularExpansion& regular, const NegativeExpansion& negative) {
  CoincidenceReport report;
  report.U = cluster_points_U(regular);
  report.V = cluster_points_V(negative);
  require_distinct(report.U);
  require_distinct(report.V);

  std::vector<bool> u_matched(report.U.size(), false);
  std::vector<Integer> matched_digits;
  for (const auto& v : report.V) {
    const bool expected = negative.d(v.index + 1) >= Integer(3);
    std::optional<std::size_t> hit;
    for (const auto& u : report.U) {
      if (u.value == v.value) {
        hit = u.index;
        break;
      }
    }
    if (hit) {
      if (!*report.U[*hit - 1].q_plus_h_odd)
        fail(ErrorCode::InternalInvariant, point_name(Side::V, v.index) + " matches " +
                                               point_name(Side::U, *hit) + " although q+h is even");
      u_matched[*hit - 1] = true;
      report.pairs.push_back({v.index, *hit, v.value});
      matched_digits.push_back(negative.d(v.index + 1));
    } else {
      if (expected)
        fail(ErrorCode::InternalInvariant, point_name(Side::V, v.index) +
                                               " has d_{i+1} >= 3 but matches no U-cluster point");
      report.v_only.push_back(v.index);
    }
  }
  for (std::size_t h = 1; h <= report.U.size(); ++h) {
    if (!u_matched[h - 1]) report.u_only.push_back(h);
  }
  if (report.pairs.size() * 2 != regular.L())
    fail(ErrorCode::InternalInvariant, std::to_string(report.pairs.size()) + " coincidences, expected L/2 = " +
                                           std::to_string(regular.L() / 2));

  std::vector<Integer> odd_side;
  std::vector<Integer> even_side;
  for (std::size_t j = 1; j <= regular.L(); ++j) (j % 2 == 1 ? odd_side : even_side).push_back(regular.b(j) + Integer(2));
  std::sort(matched_digits.begin(), matched_digits.end());
  std::sort(odd_side.begin(), odd_side.end());
  std::sort(even_side.begin(), even_side.end());
  report.transition_digits_match = matched_digits == odd_side || matched_digits == even_side;
  return report;
}

CoincidenceReport coincidence_analysis(const QuadSurd& z) {
  return coincidence_analysis(expand_regular(z), expand_negative(z));
}

ProbeReport convergence_probe(const QuadSurd& z, std::size_t periods, const Rational& tolerance) {
  if (periods < 1) fail(ErrorCode::InvalidArgument, "the probe needs at least one period");
  const RegularExpansion regular = expand_regular(z);
  const NegativeExpansion negative = expand_negative(z);

  ProbeReport report{classify(regular, negative), periods, tolerance, {}, std::nullopt, false, true};
  const bool bounded = report.classification.verdict == Verdict::Bounded;
  std::vector<ClusterPoint> U;
  std::vector<ClusterPoint> V;
  if (bounded) {
    U = cluster_points_U(regular);
    V = cluster_points_V(negative);
  }

  const std::size_t L = regular.L();
  const std::size_t m = negative.m();
  const long q = regular.q();
  const long r = negative.r();
  const auto regular_table = convergents(regular.digits(), static_cast<std::size_t>(q + static_cast<long>(periods * L)));
  const auto negative_table = convergents(negative.digits(), static_cast<std::size_t>(r + static_cast<long>(periods * m)));
  const Rational expected_u_drift(report.classification.B);
  const Rational expected_v_drift = negative_partial(negative, m);

  auto finish = [&](ClassProbe& probe, const std::vector<Rational>& without_correction, const Rational& expected) {
    if (periods >= 2) {
      probe.drift_per_period = (without_correction.back() - without_correction.front()) /
                               Rational(static_cast<long>(periods - 1));
      report.drift_matches = report.drift_matches && probe.drift_per_period == expected;
    } else {
      probe.drift_per_period = expected;
    }
    probe.monotone_tail = true;
    if (probe.cluster) {
      for (const auto& s : probe.sums) probe.gaps.push_back(absolute(Number(s) - *probe.cluster));
      const std::size_t first = probe.gaps.size() >= 3 ? probe.gaps.size() - 3 : 0;
      for (std::size_t n = first + 1; n < probe.gaps.size(); ++n)
        probe.monotone_tail = probe.monotone_tail && probe.gaps[n] <= probe.gaps[n - 1];
      if (!report.worst_gap || probe.gaps.back() > *report.worst_gap) report.worst_gap = probe.gaps.back();
    }
    report.classes.push_back(std::move(probe));
  };

  for (std::size_t h = 1; h <= L; ++h) {
    ClassProbe probe{Side::U, h, {}, {}, std::nullopt, {}, Rational(), true};
    if (bounded) probe.cluster = U[h - 1].value;
    std::vector<Rational> without_correction;
    for (std::size_t n = 0; n < periods; ++n) {
      const long k = q + static_cast<long>(n * L + h);
      const auto& cur = regular_table.at(k);
      const auto& prev = regular_table.at(k - 1);
      Rational s = dedekind_fast(cur.num, cur.den).value;
      const Rational correction = k % 2 != 0 ? Rational(cur.num + prev.den, cur.den) - Rational(3)
                                             : Rational(cur.num - prev.den, cur.den);
      without_correction.push_back(s - correction);
      probe.convergent_indices.push_back(static_cast<std::size_t>(k));
      probe.sums.push_back(std::move(s));
    }
    finish(probe, without_correction, expected_u_drift);
  }
  for (std::size_t i = 1; i <= m; ++i) {
    ClassProbe probe{Side::V, i, {}, {}, std::nullopt, {}, Rational(), true};
    if (bounded) probe.cluster = V[i - 1].value;
    std::vector<Rational> without_correction;
    for (std::size_t n = 0; n < periods; ++n) {
      const long j = r + static_cast<long>(n * m + i);
      const auto& cur = negative_table.at(j);
      const auto& prev = negative_table.at(j - 1);
      Rational s = dedekind_fast(cur.num, cur.den).value;
      without_correction.push_back(s - (Rational(cur.num - prev.den, cur.den) - Rational(3)));
      probe.convergent_indices.push_back(static_cast<std::size_t>(j));
      probe.sums.push_back(std::move(s));
    }
    finish(probe, without_correction, expected_v_drift);
  }

  if (bounded) {
    const Number tol(tolerance);
    report.within_tolerance = std::all_of(report.classes.begin(), report.classes.end(),
                                          [&](const ClassProbe& c) { return c.gaps.back() < tol; });
  }
  return report;
}

void require_tolerance(const ProbeReport& report) {
  if (report.classification.verdict != Verdict::Bounded || report.within_tolerance) return;
  fail(ErrorCode::ToleranceNotReached,
       "largest final gap " + report.worst_gap->to_decimal(12) + " is not below " + report.tolerance.to_decimal(12));
}

}  // namespace cfded
