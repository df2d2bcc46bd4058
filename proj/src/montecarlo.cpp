#include "chemin/montecarlo.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace chemin {

std::uint64_t CardSampler::uniform(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform bound must be positive");
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  // Largest multiple of bound, minus one; draws above it are rejected.
  const std::uint64_t limit = kMax - (kMax % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x > limit);
  return x % bound;
}

int CardSampler::card_value() { return rank_value(static_cast<int>(uniform(kRanks))); }

int CardSampler::two_card_total() { return mod10(card_value() + card_value()); }

bool CardSampler::bernoulli(const Rational& p) {
  if (p.sign() <= 0) return false;
  if (p >= Rational(1)) return true;
  if (p.den() > std::numeric_limits<std::uint64_t>::max()) {
    throw std::invalid_argument("probability denominator exceeds 64 bits");
  }
  const auto den = p.den().convert_to<std::uint64_t>();
  const auto num = p.num().convert_to<std::uint64_t>();
  return uniform(den) < num;
}

double SimResult::rate(std::uint64_t count) const {
  return coups == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(coups);
}

double SimResult::binomial_se(double p) const {
  return coups == 0 ? 0.0 : std::sqrt(p * (1.0 - p) / static_cast<double>(coups));
}

double SimResult::expectation() const { return win_rate() - loss_rate(); }

double SimResult::expectation_std_error() const {
  if (coups == 0) return 0.0;
  const double e = expectation();
  const double second_moment = win_rate() + loss_rate();
  return std::sqrt((second_moment - e * e) / static_cast<double>(coups));
}

SimResult simulate(const SimConfig& config) {
  if (config.coups == 0) throw std::invalid_argument("simulate: coups must be at least 1");
  CardSampler cards(config.seed);
  const DecisionTable& table = config.policy.banker;
  const Rational& draw_at_five = config.policy.five.draw_probability();

  SimResult result;
  result.coups = config.coups;
  for (std::uint64_t n = 0; n < config.coups; ++n) {
    int player = cards.two_card_total();
    int banker = cards.two_card_total();
    if (player < 8 && banker < 8) {
      bool player_draws = player <= 4;
      if (player == 5) player_draws = cards.bernoulli(draw_at_five);
      int column = kStand;
      if (player_draws) {
        column = cards.card_value();
        player = mod10(player + column);
      }
      if (table.draws(banker, column)) banker = mod10(banker + cards.card_value());
    }
    if (player > banker) {
      ++result.wins;
    } else if (player == banker) {
      ++result.ties;
    } else {
      ++result.losses;
    }
  }
  return result;
}

}  // namespace chemin
