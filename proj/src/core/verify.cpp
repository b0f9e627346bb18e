#include "cfded/verify.hpp"

#include <functional>
#include <span>

#include "cfded/clusters.hpp"
#include "cfded/contfrac.hpp"
#include "cfded/error.hpp"
#include "cfded/parse.hpp"

namespace cfded {

namespace {

std::vector<Integer> ints(std::initializer_list<long> values) {
  return {values.begin(), values.end()};
}

std::string list(std::span<const Integer> digits) {
  std::string out;
  for (const auto& d : digits) out += (out.empty() ? "" : ",") + d.to_string();
  return out;
}

// a_0..a_17 of e = [2; 1, 2, 1, 1, 4, 1, 1, 6, ...].
std::vector<Integer> e_regular_digits() {
  std::vector<Integer> out{Integer(2)};
  for (long k = 1; out.size() < 18; ++k) {
    out.emplace_back(1);
    out.emplace_back(2 * k);
    out.emplace_back(1);
  }
  out.resize(18);
  return out;
}

struct Expected {
  std::size_t i;
  std::size_t h;
  const char* expression;
  const char* decimal;
};

}  // namespace

std::vector<VerifyCheck> run_golden_checks() {
  std::vector<VerifyCheck> checks;
  auto run = [&](const std::string& name, const std::function<std::string()>& body) {
    try {
      const std::string problem = body();
      checks.push_back({name, problem.empty(), problem});
    } catch (const std::exception& e) {
      checks.push_back({name, false, e.what()});
    }
  };

  const QuadSurd z = parse_surd("1/sqrt(53)").value;

  run("1/sqrt(53) regular expansion [0,7; (3,1,1,3,14)]", [&]() -> std::string {
    const auto e = expand_regular(z);
    if (e.preperiod() != ints({0, 7}) || e.period() != ints({3, 1, 1, 3, 14}))
      return "got " + list(e.preperiod()) + "; " + list(e.period());
    return {};
  });

  run("1/sqrt(53) negative expansion <1,2^6; (5,3,2,2,16,2,2,3,5,2^13)>", [&]() -> std::string {
    const auto e = expand_negative(z);
    std::vector<Integer> period = ints({5, 3, 2, 2, 16, 2, 2, 3, 5});
    period.insert(period.end(), 13, Integer(2));
    if (e.preperiod() != ints({1, 2, 2, 2, 2, 2, 2}) || e.period() != period)
      return "got " + list(e.preperiod()) + "; " + list(e.period());
    return {};
  });

  const Expected coincidences[] = {
      {1, 2, "(636+60*sqrt(53))/371", "2.89166"},
      {4, 4, "(-159+54*sqrt(53))/53", "4.41747"},
      {7, 6, "(-2862+60*sqrt(53))/371", "-6.53690"},
      {8, 8, "(-1749+57*sqrt(53))/212", "-6.29261"},
      {22, 10, "(477+57*sqrt(53))/212", "4.20738"},
  };

  std::optional<CoincidenceReport> analysis;
  run("1/sqrt(53) is bounded with L = 10, m = 22", [&]() -> std::string {
    const auto report = classify(z);
    if (report.verdict != Verdict::Bounded) return std::string("verdict ") + verdict_name(report.verdict);
    analysis = coincidence_analysis(z);
    if (analysis->U.size() != 10 || analysis->V.size() != 22)
      return "L = " + std::to_string(analysis->U.size()) + ", m = " + std::to_string(analysis->V.size());
    return {};
  });

  run("1/sqrt(53) has exactly the five coincidences V_i = U_h", [&]() -> std::string {
    if (!analysis) return "cluster analysis unavailable";
    if (analysis->pairs.size() != 5) return std::to_string(analysis->pairs.size()) + " pairs";
    for (std::size_t n = 0; n < 5; ++n) {
      const auto& got = analysis->pairs[n];
      const auto& want = coincidences[n];
      const Number expected = parse_number(want.expression);
      if (got.i != want.i || got.h != want.h || !(got.value == expected))
        return "pair " + std::to_string(n + 1) + ": V_" + std::to_string(got.i) + " = U_" + std::to_string(got.h) +
               " = " + got.value.to_expression();
      if (got.value.to_decimal(5) != want.decimal) return "decimal " + got.value.to_decimal(5) + " != " + want.decimal;
    }
    return {};
  });

  run("U_7 and V_12 lie close together but differ", [&]() -> std::string {
    if (!analysis) return "cluster analysis unavailable";
    const Number u7 = analysis->U[6].value;
    const Number v12 = analysis->V[11].value;
    if (!(u7 == parse_number("(-1749-46*sqrt(53))/371"))) return "U_7 = " + u7.to_expression();
    if (!(v12 == parse_number("(-13833+97*sqrt(53))/2332"))) return "V_12 = " + v12.to_expression();
    if (u7 == v12) return "U_7 == V_12";
    if (u7.to_decimal(5) != "-5.61694" || v12.to_decimal(5) != "-5.62900")
      return "decimals " + u7.to_decimal(5) + ", " + v12.to_decimal(5);
    return {};
  });

  const auto e_regular = e_regular_digits();
  const DigitSequence e_reg(Kind::Regular, e_regular);
  const DigitSequence e_neg(Kind::Negative, transition_prefix(e_regular));

  run("e: transition prefix <3,4,3,2^3,3,8,3,2^7,3,12,3>", [&]() -> std::string {
    std::vector<Integer> want = ints({3, 4, 3, 2, 2, 2, 3, 8, 3});
    want.insert(want.end(), 7, Integer(2));
    for (long d : {3, 12, 3}) want.emplace_back(d);
    if (e_neg.preperiod() != want) return "got " + list(e_neg.preperiod());
    return {};
  });

  run("e: s_j/t_j is a regular convergent exactly for j in {1,5,6,7,15,16,17}", [&]() -> std::string {
    const std::size_t flagged[] = {1, 5, 6, 7, 15, 16, 17};
    const std::size_t as_regular[] = {3, 5, 7, 9, 11, 13, 15};
    const char* values[] = {"11/4", "87/32", "193/71", "1457/536", "23225/8544", "49171/18089", "566827/208524"};
    const auto neg = convergents(e_neg, 17);
    const auto reg = convergents(e_reg, 17);
    std::size_t next = 0;
    for (std::size_t j = 1; j <= 17; ++j) {
      const bool expected = next < 7 && flagged[next] == j;
      if (is_floor_convergent(e_neg, j) != expected) return "criterion wrong at j = " + std::to_string(j);
      if (!expected) continue;
      const auto& s = neg.at(static_cast<long>(j));
      if (s.value().to_string() != values[next]) return "s_" + std::to_string(j) + "/t_" + std::to_string(j) + " = " + s.value().to_string();
      const auto& p = reg.at(static_cast<long>(as_regular[next]));
      if (p.num != s.num || p.den != s.den) return "s_" + std::to_string(j) + "/t_" + std::to_string(j) + " != p_k/q_k";
      ++next;
    }
    return {};
  });

  run("e: s_2/t_2 = (p_4+p_3)/(q_4+q_3), s_8/t_8 = (p_10+p_9)/(q_10+q_9)", [&]() -> std::string {
    for (const auto& [j, k] : {std::pair<std::size_t, long>{2, 4}, {8, 10}}) {
      const auto form = intercalary_decompose(e_reg, e_neg, j);
      if (form.exact_convergent || form.k != k || form.multiple != Integer(1))
        return "j = " + std::to_string(j) + " decomposed as k = " + std::to_string(form.k) + ", i = " + form.multiple.to_string();
    }
    return {};
  });

  return checks;
}

}  // namespace cfded
