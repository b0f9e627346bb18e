#include "cfded/report.hpp"

#include <algorithm>
#include <sstream>

#include "cfded/dedekind.hpp"
#include "cfded/error.hpp"
#include "json.hpp"

namespace cfded::report {

using nlohmann::ordered_json;

namespace {

constexpr unsigned kPreviewDigits = 10;

ordered_json digit_array(std::span<const Integer> digits) {
  ordered_json out = ordered_json::array();
  for (const auto& d : digits) out.push_back(d.to_string());
  return out;
}

std::string quadruple(const Number& x, const Integer& radicand) {
  if (x.is_surd()) return x.surd().to_quadruple();
  const Rational& r = x.rational();
  return r.num().to_string() + " 0 " + r.den().to_string() + " " + radicand.to_string();
}

ordered_json number_json(const Number& x, const Integer& radicand, unsigned precision) {
  return {{"expression", x.to_expression()},
          {"quadruple", quadruple(x, radicand)},
          {"decimal", x.to_decimal(precision)}};
}

// Non-negative x as "4.313e-5", mantissa truncated; exact scaling by 10.
std::string scientific(const Number& x, unsigned digits = 4) {
  if (x.sign() == 0) return "0";
  Number m = x;
  long exponent = 0;
  while (m >= Number(10)) {
    m = m / Number(10);
    ++exponent;
  }
  while (m < Number(1)) {
    m = m * Number(10);
    --exponent;
  }
  return m.to_decimal(digits - 1) + "e" + std::to_string(exponent);
}

std::string scientific(const Rational& x) { return scientific(Number(x)); }

ordered_json input_json(const QuadSurd& z) {
  return {{"expression", z.to_expression()},
          {"quadruple", z.to_quadruple()},
          {"decimal", z.to_decimal(kPreviewDigits)}};
}

ordered_json regular_json(const RegularExpansion& e, std::size_t depth) {
  return {{"preperiod", digit_array(e.preperiod())},
          {"period", digit_array(e.period())},
          {"q", std::to_string(e.q())},
          {"l", std::to_string(e.l())},
          {"L", std::to_string(e.L())},
          {"digits", digit_array(e.digits().take(depth))}};
}

ordered_json negative_json(const NegativeExpansion& e, std::size_t depth) {
  return {{"preperiod", digit_array(e.preperiod())},
          {"period", digit_array(e.period())},
          {"r", std::to_string(e.r())},
          {"m", std::to_string(e.m())},
          {"digits", digit_array(e.digits().take(depth))}};
}

std::string join(const ordered_json& arr, const char* sep = ",") {
  std::string out;
  for (const auto& v : arr) out += (out.empty() ? "" : sep) + v.get<std::string>();
  return out;
}

std::string emit(const ordered_json& doc, Format format, const std::string& text) {
  if (format == Format::Json) return doc.dump(2) + "\n";
  return text;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

// Right-aligned table from rows of cells.
std::string table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t c = 0; c < cells.size(); ++c) out += (c ? "  " : "") + pad(cells[c], width[c]);
    while (!out.empty() && out.back() == ' ') out.pop_back();
    os << out << "\n";
  };
  line(header);
  for (const auto& row : rows) line(row);
  return os.str();
}

std::string describe_input(const ordered_json& input) {
  return "z = " + input["expression"].get<std::string>() + "  [" + input["quadruple"].get<std::string>() +
         "]  ~ " + input["decimal"].get<std::string>() + "\n";
}

std::string expansion_text(const char* label, const char* open, const char* close, const ordered_json& e) {
  std::string out = std::string(label) + ": " + open + join(e["preperiod"]);
  if (!e["preperiod"].empty()) out += "; ";
  out += "period(" + join(e["period"]) + ")" + close + "\n";
  return out;
}

ordered_json form_json(const IntercalaryForm& form) {
  if (form.exact_convergent) return {{"form", "convergent"}, {"k", std::to_string(form.k)}};
  return {{"form", "intercalary"}, {"k", std::to_string(form.k)}, {"multiple", form.multiple.to_string()}};
}

std::string form_text(const ordered_json& form) {
  if (form.is_null()) return "";
  const std::string k = form["k"].get<std::string>();
  const std::string km1 = std::to_string(std::stol(k) - 1);
  if (form["form"] == "convergent") return "p_" + k + "/q_" + k;
  const std::string i = form["multiple"].get<std::string>();
  const std::string coeff = i == "1" ? "" : i;
  return "(" + coeff + "p_" + k + "+p_" + km1 + ")/(" + coeff + "q_" + k + "+q_" + km1 + ")";
}

ordered_json convergent_rows(const ConvergentTable& table, std::size_t last) {
  ordered_json rows = ordered_json::array();
  for (long k = -1; k <= static_cast<long>(last); ++k) {
    const auto& c = table.at(k);
    rows.push_back({{"index", std::to_string(k)}, {"num", c.num.to_string()}, {"den", c.den.to_string()}});
  }
  return rows;
}

// Adds criterion / membership / decomposition columns to negative rows.
void annotate_negative(ordered_json& rows, const DigitSequence& negative, const DigitSequence* regular) {
  for (auto& row : rows) {
    const long j = std::stol(row["index"].get<std::string>());
    if (j < 1) continue;
    const auto idx = static_cast<std::size_t>(j);
    if (negative.has(idx + 1)) row["floor_convergent"] = is_floor_convergent(negative, idx);
    if (regular == nullptr) continue;
    try {
      row["decomposition"] = form_json(intercalary_decompose(*regular, negative, idx));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::IndexOutOfRange) throw;
    }
  }
}

std::string convergent_text(const char* title, const char* num, const char* den, const ordered_json& rows) {
  std::vector<std::vector<std::string>> cells;
  bool annotated = false;
  for (const auto& row : rows) annotated = annotated || row.contains("floor_convergent") || row.contains("decomposition");
  for (const auto& row : rows) {
    std::vector<std::string> line{row["index"].get<std::string>(), row["num"].get<std::string>(),
                                  row["den"].get<std::string>()};
    if (annotated) {
      line.push_back(row.contains("floor_convergent") ? (row["floor_convergent"].get<bool>() ? "yes" : "no") : "");
      line.push_back(row.contains("decomposition") ? form_text(row["decomposition"]) : "");
    }
    cells.push_back(std::move(line));
  }
  std::vector<std::string> header{"index", num, den};
  if (annotated) {
    header.emplace_back("regular?");
    header.emplace_back("as regular");
  }
  return std::string(title) + "\n" + table(header, cells);
}

}  // namespace

std::string expand(const QuadSurd& z, bool regular, bool negative, std::size_t depth, Format format) {
  ordered_json doc{{"input", input_json(z)}};
  std::string text = describe_input(doc["input"]);
  if (regular) {
    doc["regular"] = regular_json(expand_regular(z), depth);
    text += expansion_text("regular ", "[", "]", doc["regular"]);
    text += "  q=" + doc["regular"]["q"].get<std::string>() + " l=" + doc["regular"]["l"].get<std::string>() +
            " L=" + doc["regular"]["L"].get<std::string>() + "\n  first digits: " + join(doc["regular"]["digits"]) + "\n";
  }
  if (negative) {
    doc["negative"] = negative_json(expand_negative(z), depth);
    text += expansion_text("negative", "<", ">", doc["negative"]);
    text += "  r=" + doc["negative"]["r"].get<std::string>() + " m=" + doc["negative"]["m"].get<std::string>() +
            "\n  first digits: " + join(doc["negative"]["digits"]) + "\n";
  }
  return emit(doc, format, text);
}

std::string expand_digits(const std::vector<Integer>& digits, Kind kind, Format format) {
  ordered_json doc{{"input", {{"kind", kind_name(kind)}, {"digits", digit_array(digits)}}}};
  std::string text;
  if (kind == Kind::Regular) {
    doc["regular"] = {{"digits", digit_array(digits)}};
    doc["negative"] = {{"digits", digit_array(transition_prefix(digits))}, {"source", "transition"}};
    text = "regular : [" + join(doc["regular"]["digits"]) + "]\n" + "negative: <" +
           join(doc["negative"]["digits"]) + ", ...>  (determined prefix)\n";
  } else {
    doc["negative"] = {{"digits", digit_array(digits)}};
    text = "negative: <" + join(doc["negative"]["digits"]) + ", ...>\n";
  }
  return emit(doc, format, text);
}

std::string convergents(const QuadSurd& z, std::size_t depth, Format format) {
  const auto regular = expand_regular(z);
  const auto negative = expand_negative(z);
  ordered_json doc{{"input", input_json(z)}};
  doc["regular"] = convergent_rows(cfded::convergents(regular.digits(), depth), depth);
  doc["negative"] = convergent_rows(cfded::convergents(negative.digits(), depth), depth);
  annotate_negative(doc["negative"], negative.digits(), &regular.digits());
  for (auto& row : doc["negative"]) {
    const long j = std::stol(row["index"].get<std::string>());
    if (j < 1) continue;
    const auto witness = legendre_witness(negative, static_cast<std::size_t>(j));
    row["legendre"] = {{"lhs", witness.lhs.to_decimal(kPreviewDigits)},
                       {"rhs", witness.rhs.to_string()},
                       {"holds", witness.holds}};
  }
  const std::string text = describe_input(doc["input"]) +
                           convergent_text("regular convergents p_k/q_k", "p", "q", doc["regular"]) + "\n" +
                           convergent_text("negative convergents s_j/t_j", "s", "t", doc["negative"]);
  return emit(doc, format, text);
}

std::string convergents_digits(const std::vector<Integer>& digits, Kind kind, std::size_t depth, Format format) {
  ordered_json doc{{"input", {{"kind", kind_name(kind)}, {"digits", digit_array(digits)}}}};
  std::string text;
  if (kind == Kind::Regular) {
    const DigitSequence regular(Kind::Regular, digits);
    const DigitSequence negative(Kind::Negative, transition_prefix(digits));
    const std::size_t regular_last = std::min(depth, digits.size() - 1);
    doc["regular"] = convergent_rows(cfded::convergents(regular, regular_last), regular_last);
    text += convergent_text("regular convergents p_k/q_k", "p", "q", doc["regular"]);
    if (negative.finite_size() > 0) {
      const std::size_t negative_last = std::min(depth, negative.finite_size() - 1);
      doc["negative"] = convergent_rows(cfded::convergents(negative, negative_last), negative_last);
      annotate_negative(doc["negative"], negative, &regular);
      text += "\n" + convergent_text("negative convergents s_j/t_j (from the transition prefix)", "s", "t",
                                     doc["negative"]);
    }
  } else {
    const DigitSequence negative(Kind::Negative, digits);
    const std::size_t last = std::min(depth, digits.size() - 1);
    doc["negative"] = convergent_rows(cfded::convergents(negative, last), last);
    annotate_negative(doc["negative"], negative, nullptr);
    text += convergent_text("negative convergents s_j/t_j", "s", "t", doc["negative"]);
  }
  return emit(doc, format, text);
}

std::string dedekind(const QuadSurd& z, std::size_t depth, Format format) {
  const auto regular = expand_regular(z);
  const auto negative = expand_negative(z);
  const auto regular_table = cfded::convergents(regular.digits(), depth);
  const auto negative_table = cfded::convergents(negative.digits(), depth);
  ordered_json doc{{"input", input_json(z)}};
  ordered_json rows = ordered_json::array();
  std::vector<std::vector<std::string>> regular_cells;
  for (std::size_t k = 0; k <= depth; ++k) {
    const auto& c = regular_table.at(static_cast<long>(k));
    ordered_json row{{"k", std::to_string(k)}, {"p", c.num.to_string()}, {"q", c.den.to_string()},
                     {"fast", dedekind_fast(c.num, c.den).value.to_string()}};
    if (static_cast<long>(k) > regular.q()) row["formula"] = dedekind_regular_formula(regular, k).value.to_string();
    if (c.den <= Integer(kNaiveReportLimit)) row["naive"] = dedekind_naive(c.num, c.den).value.to_string();
    regular_cells.push_back({row["k"], row["p"], row["q"], row["fast"], row.value("formula", ""), row.value("naive", "")});
    rows.push_back(std::move(row));
  }
  doc["regular"] = std::move(rows);
  rows = ordered_json::array();
  std::vector<std::vector<std::string>> negative_cells;
  for (std::size_t j = 0; j <= depth; ++j) {
    const auto& c = negative_table.at(static_cast<long>(j));
    ordered_json row{{"j", std::to_string(j)}, {"s", c.num.to_string()}, {"t", c.den.to_string()},
                     {"fast", dedekind_fast(c.num, c.den).value.to_string()},
                     {"formula", dedekind_negative_formula(negative, j).value.to_string()}};
    if (c.den <= Integer(kNaiveReportLimit)) row["naive"] = dedekind_naive(c.num, c.den).value.to_string();
    negative_cells.push_back({row["j"], row["s"], row["t"], row["fast"], row["formula"], row.value("naive", "")});
    rows.push_back(std::move(row));
  }
  doc["negative"] = std::move(rows);
  const std::string text = describe_input(doc["input"]) + "S(p_k, q_k)\n" +
                           table({"k", "p", "q", "fast", "formula", "naive"}, regular_cells) + "\nS(s_j, t_j)\n" +
                           table({"j", "s", "t", "fast", "formula", "naive"}, negative_cells);
  return emit(doc, format, text);
}

std::string dedekind_pair(const Integer& a, const Integer& b, Format format) {
  ordered_json doc{{"a", a.to_string()}, {"b", b.to_string()}};
  doc["naive"] = dedekind_naive(a, b).value.to_string();
  const bool coprime = gcd(a, b) == Integer(1);
  doc["fast"] = coprime ? ordered_json(dedekind_fast(a, b).value.to_string()) : ordered_json(nullptr);
  std::string text = "S(" + a.to_string() + ", " + b.to_string() + ") = " + doc["naive"].get<std::string>() +
                     "  (naive)\n";
  if (coprime) text += "S(" + a.to_string() + ", " + b.to_string() + ") = " + doc["fast"].get<std::string>() + "  (fast)\n";
  return emit(doc, format, text);
}

std::string clusters(const QuadSurd& z, unsigned precision, Format format) {
  const auto regular = expand_regular(z);
  const auto negative = expand_negative(z);
  const auto classification = classify(regular, negative);
  const Integer& radicand = z.radicand();

  ordered_json doc{{"input", input_json(z)}};
  doc["regular"] = {{"preperiod", digit_array(regular.preperiod())}, {"period", digit_array(regular.period())}};
  doc["negative"] = {{"preperiod", digit_array(negative.preperiod())}, {"period", digit_array(negative.period())}};
  doc["classification"] = {{"B", classification.B.to_string()},
                           {"D", classification.D.to_string()},
                           {"verdict", verdict_name(classification.verdict)}};
  ordered_json U = ordered_json::array();
  ordered_json V = ordered_json::array();
  ordered_json pairs = ordered_json::array();
  std::string text = describe_input(doc["input"]) + expansion_text("regular ", "[", "]", doc["regular"]) +
                     expansion_text("negative", "<", ">", doc["negative"]) + "B = " +
                     classification.B.to_string() + ", D = " + classification.D.to_string() + ": " +
                     verdict_name(classification.verdict) + "\n";

  if (classification.verdict == Verdict::Bounded) {
    const auto report = coincidence_analysis(regular, negative);
    std::vector<std::vector<std::string>> cells;
    for (const auto& p : report.U) {
      ordered_json entry{{"index", std::to_string(p.index)}};
      entry.update(number_json(p.value, radicand, precision));
      entry["parity"] = *p.q_plus_h_odd ? "q_plus_h_odd" : "q_plus_h_even";
      entry["generator"] = number_json(p.generator, radicand, precision);
      cells.push_back({"U_" + std::to_string(p.index), entry["decimal"], entry["expression"], entry["quadruple"],
                       *p.q_plus_h_odd ? "q+h odd" : "q+h even"});
      U.push_back(std::move(entry));
    }
    for (const auto& p : report.V) {
      ordered_json entry{{"index", std::to_string(p.index)}};
      entry.update(number_json(p.value, radicand, precision));
      entry["generator"] = number_json(p.generator, radicand, precision);
      cells.push_back({"V_" + std::to_string(p.index), entry["decimal"], entry["expression"], entry["quadruple"],
                       "d_{i+1}=" + negative.d(p.index + 1).to_string()});
      V.push_back(std::move(entry));
    }
    std::vector<std::vector<std::string>> pair_cells;
    for (const auto& pair : report.pairs) {
      ordered_json entry{{"i", std::to_string(pair.i)}, {"h", std::to_string(pair.h)}};
      entry.update(number_json(pair.value, radicand, precision));
      pair_cells.push_back({"V_" + std::to_string(pair.i) + " = U_" + std::to_string(pair.h), entry["decimal"],
                            entry["expression"], entry["quadruple"]});
      pairs.push_back(std::move(entry));
    }
    ordered_json u_only = ordered_json::array();
    for (auto h : report.u_only) u_only.push_back(std::to_string(h));
    ordered_json v_only = ordered_json::array();
    for (auto i : report.v_only) v_only.push_back(std::to_string(i));
    doc["clusters"] = {{"U", U}, {"V", V}, {"pairs", pairs}, {"u_only", u_only}, {"v_only", v_only},
                       {"transition_digits_match", report.transition_digits_match}};
    text += "\ncluster points\n" + table({"point", "decimal", "exact", "a b c N", "note"}, cells) + "\n" +
            std::to_string(report.pairs.size()) + " coincidences\n" + table({"pair", "decimal", "exact", "a b c N"}, pair_cells);
  } else {
    doc["clusters"] = {{"U", U}, {"V", V}, {"pairs", pairs}};
    text += "no cluster points: the Dedekind sums are unbounded\n";
  }
  return emit(doc, format, text);
}

std::string probe(const QuadSurd& z, const ProbeReport& probe, unsigned precision, Format format) {
  const Integer& radicand = z.radicand();
  ordered_json doc{{"input", input_json(z)}};
  doc["classification"] = {{"B", probe.classification.B.to_string()},
                           {"D", probe.classification.D.to_string()},
                           {"verdict", verdict_name(probe.classification.verdict)}};
  doc["periods"] = std::to_string(probe.periods);
  doc["tolerance"] = probe.tolerance.to_string();
  ordered_json classes = ordered_json::array();
  std::vector<std::vector<std::string>> cells;
  for (const auto& c : probe.classes) {
    ordered_json entry{{"side", side_name(c.side)}, {"index", std::to_string(c.index)}};
    ordered_json indices = ordered_json::array();
    for (auto k : c.convergent_indices) indices.push_back(std::to_string(k));
    ordered_json sums = ordered_json::array();
    for (const auto& s : c.sums) sums.push_back(s.to_string());
    entry["indices"] = indices;
    entry["sums"] = sums;
    entry["cluster"] = c.cluster ? number_json(*c.cluster, radicand, precision) : ordered_json(nullptr);
    ordered_json gaps = ordered_json::array();
    for (const auto& g : c.gaps) gaps.push_back(scientific(g));
    entry["gaps"] = gaps;
    entry["drift_per_period"] = c.drift_per_period.to_string();
    entry["monotone_tail"] = c.monotone_tail;
    cells.push_back({std::string(side_name(c.side)) + "_" + std::to_string(c.index),
                     c.cluster ? c.cluster->to_decimal(precision) : "-",
                     c.gaps.empty() ? "-" : scientific(c.gaps.back()),
                     c.drift_per_period.to_string(), c.monotone_tail ? "yes" : "no"});
    classes.push_back(std::move(entry));
  }
  doc["classes"] = classes;
  doc["worst_gap"] = probe.worst_gap ? ordered_json(scientific(*probe.worst_gap))
                                     : ordered_json(nullptr);
  doc["within_tolerance"] = probe.within_tolerance;
  doc["drift_matches"] = probe.drift_matches;
  std::string text = describe_input(doc["input"]) + "B = " + probe.classification.B.to_string() +
                     ", D = " + probe.classification.D.to_string() + ": " +
                     verdict_name(probe.classification.verdict) + "; " + std::to_string(probe.periods) +
                     " periods per class\n" +
                     table({"class", "cluster", "final gap", "drift/period", "monotone"}, cells);
  if (probe.classification.verdict == Verdict::Bounded) {
    text += "worst final gap " + doc["worst_gap"].get<std::string>() + (probe.within_tolerance ? " < " : " >= ") +
            scientific(probe.tolerance) + "\n";
  }
  text += std::string("drift matches the period formula: ") + (probe.drift_matches ? "yes" : "no") + "\n";
  return emit(doc, format, text);
}

std::string verify(const std::vector<VerifyCheck>& checks, Format format) {
  ordered_json doc{{"checks", ordered_json::array()}};
  std::string text;
  bool all = true;
  for (const auto& check : checks) {
    doc["checks"].push_back({{"name", check.name}, {"passed", check.passed}, {"detail", check.detail}});
    text += std::string(check.passed ? "PASS  " : "FAIL  ") + check.name +
            (check.detail.empty() ? "" : "  (" + check.detail + ")") + "\n";
    all = all && check.passed;
  }
  doc["passed"] = all;
  text += all ? "all checks passed\n" : "verification FAILED\n";
  return emit(doc, format, text);
}

}  // namespace cfded::report
