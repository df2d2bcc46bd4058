#include "chemin/report.hpp"

#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

namespace chemin::report {
namespace {

DecisionTable random_table(std::mt19937_64& rng) {
  DecisionTable t;
  for (int j = 0; j < kBankerRows; ++j)
    for (int k = 0; k < kColumns; ++k) t.set(j, k, rng() & 1);
  return t;
}

TEST(Report, RenderFraction) {
  EXPECT_EQ(render_fraction(Rational(-44, 1781), {}), "-0.024705");
  EXPECT_EQ(render_fraction(Rational(287, 23153), {}), "0.012396");
  EXPECT_EQ(render_fraction(Rational(2, 4), {true, 6}), "1/2");
  EXPECT_EQ(render_fraction(Rational(3), {true, 6}), "3");
  EXPECT_EQ(render_fraction(Rational(1, 8), {false, 2}), "0.13");
  EXPECT_EQ(render_fraction(Rational(-1, 10000000), {}), "0.000000");
}

TEST(Report, TableCsvRoundTrip) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    const DecisionTable t = random_table(rng);
    EXPECT_EQ(parse_table_csv(table_csv(t)), t);
    EXPECT_EQ(parse_table_structured(table_structured(t)), t);
  }
}

TEST(Report, TableCsvLayout) {
  const std::string csv = table_csv(best_response_table(PlayerStrategy::kTireur));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "total,0,1,2,3,4,5,6,7,8,9,stand");
  EXPECT_NE(csv.find("\n6,0,0,0,0,0,0,1,1,0,0,1\n"), std::string::npos);
  EXPECT_EQ(csv.find('\r'), std::string::npos);
}

TEST(Report, TableParseErrors) {
  EXPECT_THROW(parse_table_csv(""), std::invalid_argument);
  EXPECT_THROW(parse_table_csv("total,0\n"), std::invalid_argument);
  std::string csv = table_csv(DecisionTable{});
  csv[csv.find(",0") + 1] = '2';
  EXPECT_THROW(parse_table_csv(csv), std::invalid_argument);
  EXPECT_THROW(parse_table_structured("{"), std::invalid_argument);
  EXPECT_THROW(parse_table_structured(R"({"rows": [[0]]})"), std::invalid_argument);
}

TEST(Report, FiveExactLine) {
  ReportRequest r;
  r.command = "five";
  r.action = "draw";
  r.assumption = Assumption::kTireur;
  r.style.exact = true;
  EXPECT_EQ(run(r), "W=10176/23153 T=2976/23153 E=175/23153\n");
  r.variant = Variant::kBadoureau;
  EXPECT_EQ(run(r), "W=10288/23153 T=2800/23153 E=223/23153\n");
}

TEST(Report, CoupStructured) {
  ReportRequest r;
  r.command = "coup";
  r.format = Format::kStructured;
  const std::string out = run(r);
  EXPECT_NE(out.find("\"num\": -74176"), std::string::npos);
  EXPECT_NE(out.find("\"den\": 4826809"), std::string::npos);
  EXPECT_NE(out.find("\"decimal\": \"-0.015368\""), std::string::npos);
}

TEST(Report, CompareFlagsBertrandTireurScenario) {
  ReportRequest r;
  r.command = "compare";
  r.format = Format::kCsv;
  const std::string out = run(r);
  EXPECT_NE(out.find("\"(0,0)\",correct"), std::string::npos);
  // The correct tireur table misses Bertrand's (1,1); Badoureau's erroneous one matches.
  const auto correct = out.find("\"(1,1)\",correct");
  const auto bad = out.find("\"(1,1)\",badoureau");
  ASSERT_NE(correct, std::string::npos);
  ASSERT_NE(bad, std::string::npos);
  const auto line = [&](std::size_t at) { return out.substr(at, out.find('\n', at) - at); };
  EXPECT_NE(line(correct).find(",no,"), std::string::npos);
  EXPECT_NE(line(bad).find(",yes,"), std::string::npos);
}

TEST(Report, SolveFiveStructured) {
  ReportRequest r;
  r.command = "solve";
  r.format = Format::kStructured;
  r.style.exact = true;
  const std::string out = run(r);
  EXPECT_NE(out.find("\"kind\": \"mixed\""), std::string::npos);
  EXPECT_NE(out.find("\"num\": 341"), std::string::npos);
}

TEST(Report, InvalidRequests) {
  ReportRequest r;
  r.command = "nope";
  EXPECT_THROW(run(r), std::invalid_argument);
  r.command = "five";
  r.action = "mix";
  EXPECT_THROW(run(r), std::invalid_argument);
  r.action = "stand";
  r.assumption = Assumption::kMixed;
  r.variant = Variant::kBadoureau;
  EXPECT_THROW(run(r), std::invalid_argument);
  r.variant = Variant::kCorrect;
  r.tireur_prior = Rational(3, 2);
  EXPECT_THROW(run(r), std::invalid_argument);
  r = ReportRequest{};
  r.command = "solve";
  r.matrix = "custom";
  EXPECT_THROW(run(r), std::invalid_argument);
  r.command = "five";
  r.style.precision = 0;
  EXPECT_THROW(run(r), std::invalid_argument);
  EXPECT_THROW(parse_assumption("sometimes"), std::invalid_argument);
}

}  // namespace
}  // namespace chemin::report
