#include "chemin/five_analysis.hpp"

#include <random>

#include <gtest/gtest.h>

#include "enumeration.hpp"

namespace chemin {
namespace {

constexpr auto kNon = PlayerStrategy::kNonTireur;
constexpr auto kTir = PlayerStrategy::kTireur;

StatTriple triple(std::int64_t w, std::int64_t t, std::int64_t e, std::int64_t den) {
  return {Rational(w, den), Rational(t, den), Rational(e, den)};
}

DecisionTable random_table(std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  DecisionTable t;
  for (int j = 0; j < kBankerRows; ++j)
    for (int k = 0; k < kColumns; ++k) t.set(j, k, coin(rng));
  return t;
}

void expect_consistent(const StatTriple& s) {
  EXPECT_GE(s.win, Rational(0));
  EXPECT_GE(s.tie, Rational(0));
  EXPECT_GE(s.loss(), Rational(0));
  EXPECT_EQ(s.win + s.tie + s.loss(), Rational(1));
  EXPECT_EQ(s.expectation, Rational(2) * s.win + s.tie - Rational(1));
  EXPECT_EQ(s.expectation, Rational(2) * s.chances() - Rational(1));
}

TEST(FiveAnalysis, FourProblemsExactly) {
  const DecisionTable d0 = best_response_table(kNon);
  const DecisionTable d1 = best_response_table(kTir);
  EXPECT_EQ(five_stats(FiveAction::kStand, d0), triple(792, 153, -44, 1781));
  EXPECT_EQ(five_stats(FiveAction::kStand, d1), triple(872, 169, 132, 1781));
  EXPECT_EQ(five_stats(FiveAction::kDraw, d0), triple(10352, 2928, 479, 23153));
  EXPECT_EQ(five_stats(FiveAction::kDraw, d1), triple(10176, 2976, 175, 23153));
}

TEST(FiveAnalysis, SingleFunctionals) {
  EXPECT_EQ(five_functional(FiveAction::kStand, best_response_table(kNon), OutcomeFunctional::kWin),
            Rational(792, 1781));
  EXPECT_EQ(five_functional(FiveAction::kDraw, best_response_table(kTir), OutcomeFunctional::kSign),
            Rational(175, 23153));
  EXPECT_EQ(five_functional(FiveAction::kStand, DecisionTable{}, [](int) { return 0; }), Rational(0));
}

TEST(FiveAnalysis, BadoureauErrorsReproduceHisFractions) {
  EXPECT_EQ(five_stats(FiveAction::kDraw, historical_table(Variant::kBadoureau, kTir)),
            triple(10288, 2800, 223, 23153));
  // His other three scenarios coincide with the correct ones.
  EXPECT_EQ(five_stats(FiveAction::kStand, historical_table(Variant::kBadoureau, kNon)),
            triple(792, 153, -44, 1781));
  EXPECT_EQ(five_stats(FiveAction::kStand, historical_table(Variant::kBadoureau, kTir)),
            triple(872, 169, 132, 1781));
  EXPECT_EQ(five_stats(FiveAction::kDraw, historical_table(Variant::kBadoureau, kNon)),
            triple(10352, 2928, 479, 23153));
}

TEST(FiveAnalysis, MixedResponseExpectations) {
  const DecisionTable half = mixed_best_response(Rational(1, 2));
  EXPECT_EQ(five_stats(FiveAction::kStand, half).expectation, Rational(-44, 1781));
  EXPECT_EQ(five_stats(FiveAction::kDraw, half).expectation, Rational(287, 23153));
}

TEST(FiveAnalysis, NaiveAverages) {
  EXPECT_EQ(naive_average_ev(FiveAction::kStand, Rational(-44, 1781), Rational(132, 1781)),
            Rational(44, 1781));
  EXPECT_EQ(naive_average_ev(FiveAction::kDraw, Rational(479, 23153), Rational(175, 23153)),
            Rational(327, 23153));
  EXPECT_EQ(naive_average_ev(FiveAction::kDraw, Rational(479, 23153), Rational(223, 23153)),
            Rational(351, 23153));
}

TEST(FiveAnalysis, MatchesRawEnumeration) {
  std::vector<DecisionTable> tables = {best_response_table(kNon), best_response_table(kTir),
                                       historical_table(Variant::kBadoureau, kTir),
                                       mixed_best_response(Rational(1, 2))};
  std::mt19937_64 rng(7);
  for (int i = 0; i < 4; ++i) tables.push_back(random_table(rng));
  for (const auto& t : tables) {
    for (const bool draws : {false, true}) {
      const oracle::Counts c = oracle::five(draws, t);
      const StatTriple s = five_stats(draws ? FiveAction::kDraw : FiveAction::kStand, t);
      EXPECT_EQ(s.win, c.win());
      EXPECT_EQ(s.tie, c.tie());
      EXPECT_EQ(s.expectation, c.expectation());
    }
  }
}

TEST(FiveAnalysis, StandDependsOnlyOnStandColumn) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    DecisionTable a = random_table(rng);
    DecisionTable b = random_table(rng);
    for (int j = 0; j < kBankerRows; ++j) b.set(j, kStand, a.draws(j, kStand));
    EXPECT_EQ(five_stats(FiveAction::kStand, a), five_stats(FiveAction::kStand, b));
  }
}

TEST(FiveAnalysis, DrawDependsOnlyOnCardColumns) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    DecisionTable a = random_table(rng);
    DecisionTable b = a;
    for (int j = 0; j < kBankerRows; ++j) b.set(j, kStand, rng() & 1);
    EXPECT_EQ(five_stats(FiveAction::kDraw, a), five_stats(FiveAction::kDraw, b));
  }
}

TEST(FiveAnalysis, TripleIdentitiesOnRandomTables) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const DecisionTable t = random_table(rng);
    expect_consistent(five_stats(FiveAction::kStand, t));
    expect_consistent(five_stats(FiveAction::kDraw, t));
  }
}

TEST(FiveAnalysis, BertrandReportWithinSixDecimals) {
  const auto report = bertrand_report();
  ASSERT_EQ(report.size(), 4u);
  for (const auto& sc : report) {
    EXPECT_TRUE(sc.matches) << static_cast<int>(sc.action) << static_cast<int>(sc.assumption);
    for (const auto& d : sc.deviation) EXPECT_LE(d, six_decimal_tolerance());
  }
  EXPECT_EQ(report[0].rendered, (std::array<std::string, 3>{"0.444694", "0.085907", "-0.024705"}));
  EXPECT_EQ(report[0].reference, (std::array<std::string, 3>{"0.444694", "0.085907", "-0.024706"}));
  EXPECT_EQ(report[3].variant, Variant::kBadoureau);
  EXPECT_EQ(report[3].stats.expectation, Rational(223, 23153));
}

TEST(FiveAnalysis, BertrandLastScenarioFailsWithCorrectTable) {
  const auto report = bertrand_report(Variant::kCorrect);
  EXPECT_TRUE(report[0].matches);
  EXPECT_TRUE(report[1].matches);
  EXPECT_TRUE(report[2].matches);
  EXPECT_FALSE(report[3].matches);
  EXPECT_EQ(report[3].stats.expectation, Rational(175, 23153));
  EXPECT_EQ(report[3].rendered[2], "0.007558");
}

}  // namespace
}  // namespace chemin
