#include <gtest/gtest.h>

#include "cfded/dedekind.hpp"
#include "cfded/parse.hpp"
#include "cfded/report.hpp"
#include "json.hpp"

using cfded::Integer;
using cfded::report::Format;
using nlohmann::json;

namespace {

cfded::QuadSurd z_of(const char* text) { return cfded::parse_surd(text).value; }

}  // namespace

TEST(ReportExpand, JsonShape) {
  const json doc = json::parse(cfded::report::expand(z_of("sqrt(2)"), true, true, 5, Format::Json));
  EXPECT_EQ(doc["input"]["quadruple"], "0 1 1 2");
  EXPECT_EQ(doc["regular"]["preperiod"], json::array({"1"}));
  EXPECT_EQ(doc["regular"]["period"], json::array({"2"}));
  EXPECT_EQ(doc["regular"]["digits"].size(), 5U);
  EXPECT_EQ(doc["negative"]["period"], json::array({"2", "4"}));
  EXPECT_EQ(doc["negative"]["m"], "2");
}

TEST(ReportExpand, OneKindOnly) {
  const json doc = json::parse(cfded::report::expand(z_of("sqrt(2)"), true, false, 5, Format::Json));
  EXPECT_TRUE(doc.contains("regular"));
  EXPECT_FALSE(doc.contains("negative"));
}

TEST(ReportExpand, TextShowsPeriod) {
  const std::string text = cfded::report::expand(z_of("(1+sqrt(5))/2"), true, false, 5, Format::Text);
  EXPECT_NE(text.find("[period(1)]"), std::string::npos) << text;
}

TEST(ReportExpand, DigitStream) {
  const auto digits = cfded::parse_digit_list("2,1,2,1,1,4,1,1,6,1");
  const json doc = json::parse(cfded::report::expand_digits(digits, cfded::Kind::Regular, Format::Json));
  EXPECT_TRUE(doc.dump().find("\"8\"") != std::string::npos);
}

TEST(ReportConvergents, SeedsAndValues) {
  const json doc = json::parse(cfded::report::convergents(z_of("sqrt(2)"), 3, Format::Json));
  ASSERT_EQ(doc["regular"].size(), 5U);
  EXPECT_EQ(doc["regular"][0]["index"], "-1");
  EXPECT_EQ(doc["regular"][4]["num"], "17");
  EXPECT_EQ(doc["regular"][4]["den"], "12");
  EXPECT_TRUE(doc["negative"][2].contains("floor_convergent"));
}

TEST(ReportDedekind, PairAndTable) {
  json doc = json::parse(cfded::report::dedekind_pair(Integer(60), Integer(371), Format::Json));
  const auto want = cfded::dedekind_naive(Integer(60), Integer(371)).value.to_string();
  EXPECT_EQ(doc["naive"], want);
  EXPECT_EQ(doc["fast"], want);

  doc = json::parse(cfded::report::dedekind(z_of("sqrt(2)"), 3, Format::Json));
  EXPECT_FALSE(doc["regular"][0].contains("formula"));  // k <= q
  EXPECT_EQ(doc["regular"][3]["formula"], "-1/6");
  EXPECT_EQ(doc["regular"][3]["fast"], "-1/6");
  EXPECT_EQ(doc["negative"][0]["formula"], doc["negative"][0]["fast"]);
}

TEST(ReportDedekind, NaiveRouteIsCappedForLargeDenominators) {
  const json doc = json::parse(cfded::report::dedekind(z_of("1/sqrt(53)"), 30, Format::Json));
  const auto& last = doc["regular"].back();
  EXPECT_FALSE(last.contains("naive"));
  EXPECT_TRUE(doc["regular"][2].contains("naive"));
}

TEST(ReportClusters, WorkedSurd) {
  const json doc = json::parse(cfded::report::clusters(z_of("1/sqrt(53)"), 5, Format::Json));
  EXPECT_EQ(doc["classification"]["verdict"], "bounded");
  EXPECT_EQ(doc["clusters"]["U"].size(), 10U);
  EXPECT_EQ(doc["clusters"]["V"].size(), 22U);
  const auto& pair = doc["clusters"]["pairs"][0];
  EXPECT_EQ(pair["expression"], "(636+60*sqrt(53))/371");
  EXPECT_EQ(pair["quadruple"], "636 60 371 53");
  EXPECT_EQ(pair["decimal"], "2.89166");
  EXPECT_EQ(doc["clusters"]["pairs"].size(), 5U);
}

TEST(ReportClusters, UnboundedHasNoLists) {
  const json doc = json::parse(cfded::report::clusters(z_of("sqrt(3)"), 5, Format::Json));
  EXPECT_EQ(doc["classification"]["verdict"], "diverges_minus");
  EXPECT_TRUE(!doc.contains("clusters") || doc["clusters"].is_null() || doc["clusters"]["U"].empty());
}

TEST(ReportProbe, UnboundedDrift) {
  const auto z = z_of("sqrt(3)");
  const auto probe = cfded::convergence_probe(z, 2, cfded::Rational(Integer(1), Integer(1000000)));
  const json doc = json::parse(cfded::report::probe(z, probe, 5, Format::Json));
  EXPECT_EQ(doc["periods"], "2");
  EXPECT_EQ(doc["classes"][0]["drift_per_period"], "-1");
  EXPECT_TRUE(doc["classes"][0]["cluster"].is_null());
}

TEST(ReportVerify, AllGoldenChecksPass) {
  const auto checks = cfded::run_golden_checks();
  ASSERT_FALSE(checks.empty());
  for (const auto& c : checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
  const json doc = json::parse(cfded::report::verify(checks, Format::Json));
  EXPECT_EQ(doc["checks"].size(), checks.size());
}

TEST(ReportVerify, TextMarksEachCheck) {
  std::vector<cfded::VerifyCheck> checks{{"first", true, ""}, {"second", false, "mismatch"}};
  const std::string text = cfded::report::verify(checks, Format::Text);
  EXPECT_NE(text.find("PASS"), std::string::npos) << text;
  EXPECT_NE(text.find("FAIL"), std::string::npos) << text;
  EXPECT_NE(text.find("mismatch"), std::string::npos) << text;
}
