#include "chemin/montecarlo.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

namespace chemin {
namespace {

CoupPolicy non_tireur_policy() { return {FivePolicy::stand(), best_response_table(PlayerStrategy::kNonTireur)}; }

TEST(CardSampler, UniformStaysInRange) {
  CardSampler s(11);
  for (std::uint64_t bound : {1ULL, 2ULL, 3ULL, 13ULL, 1000003ULL}) {
    for (int i = 0; i < 2000; ++i) EXPECT_LT(s.uniform(bound), bound);
  }
  EXPECT_THROW(s.uniform(0), std::invalid_argument);
}

TEST(CardSampler, BernoulliEdges) {
  CardSampler s(5);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_FALSE(s.bernoulli(Rational(0)));
    EXPECT_TRUE(s.bernoulli(Rational(1)));
  }
  int hits = 0;
  constexpr int n = 200000;
  for (int i = 0; i < n; ++i) hits += s.bernoulli(Rational(1, 3));
  const double se = std::sqrt((1.0 / 3) * (2.0 / 3) / n);
  EXPECT_NEAR(hits / double(n), 1.0 / 3, 4 * se);
}

TEST(CardSampler, TwoCardTotalsFollowConvolution) {
  // Chi-square goodness of fit, 9 degrees of freedom, alpha = 1e-3.
  constexpr int n = 1'000'000;
  constexpr double kCritical = 27.877;
  CardSampler s(2024);
  std::array<int, kCardValues> counts{};
  for (int i = 0; i < n; ++i) ++counts[s.two_card_total()];
  double chi2 = 0;
  for (int j = 0; j < kCardValues; ++j) {
    const double expected = n * two_card_pdf(j).to_double();
    chi2 += (counts[j] - expected) * (counts[j] - expected) / expected;
  }
  EXPECT_LT(chi2, kCritical);
}

TEST(Simulate, SingleCoupHasOneOutcome) {
  const SimResult r = simulate({1, 7, non_tireur_policy()});
  EXPECT_EQ(r.coups, 1u);
  EXPECT_EQ(r.wins + r.ties + r.losses, 1u);
}

TEST(Simulate, ZeroCoupsRejected) {
  EXPECT_THROW(simulate({0, 1, non_tireur_policy()}), std::invalid_argument);
}

TEST(Simulate, SameSeedSameResult) {
  const SimConfig config{20000, 99, non_tireur_policy()};
  EXPECT_EQ(simulate(config), simulate(config));
  SimConfig other = config;
  other.seed = 100;
  EXPECT_NE(simulate(config), simulate(other));
}

TEST(Simulate, CloseToExactStats) {
  constexpr std::uint64_t n = 200000;
  for (const auto& policy : {non_tireur_policy(),
                             CoupPolicy{FivePolicy::mix(Rational(1, 2)), mixed_best_response(Rational(1, 2))}}) {
    const StatTriple exact = coup_stats(policy);
    const SimResult r = simulate({n, 4, policy});
    EXPECT_EQ(r.wins + r.ties + r.losses, n);
    const auto se = [](double p) { return std::sqrt(p * (1 - p) / n); };
    EXPECT_NEAR(r.win_rate(), exact.win.to_double(), 4 * se(exact.win.to_double()));
    EXPECT_NEAR(r.tie_rate(), exact.tie.to_double(), 4 * se(exact.tie.to_double()));
    EXPECT_NEAR(r.loss_rate(), exact.loss().to_double(), 4 * se(exact.loss().to_double()));
    EXPECT_NEAR(r.expectation(), r.win_rate() - r.loss_rate(), 1e-12);
  }
}

}  // namespace
}  // namespace chemin
