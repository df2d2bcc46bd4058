#pragma once

#include <cstdint>
#include <random>

#include "chemin/coup_analysis.hpp"

namespace chemin {

/// Draws card values with replacement from a 64-bit Mersenne Twister.
///
/// std::mt19937_64 is fully specified by the standard, and the mapping to
/// ranks is our own rejection sampler rather than a library distribution,
/// so a seed gives the same card stream on every conforming build.
class CardSampler {
 public:
  explicit CardSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t uniform(std::uint64_t bound);
  /// Value of a uniformly chosen rank (0 with probability 4/13).
  int card_value();
  /// Two-card hand total.
  int two_card_total();
  /// True with probability `p`; p's denominator must fit in 64 bits.
  bool bernoulli(const Rational& p);

 private:
  std::mt19937_64 engine_;
};

struct SimConfig {
  std::uint64_t coups = 0;
  std::uint64_t seed = 0;
  CoupPolicy policy;
};

struct SimResult {
  std::uint64_t coups = 0;
  std::uint64_t wins = 0;
  std::uint64_t ties = 0;
  std::uint64_t losses = 0;

  double win_rate() const { return rate(wins); }
  double tie_rate() const { return rate(ties); }
  double loss_rate() const { return rate(losses); }
  double expectation() const;

  /// Binomial standard error sqrt(p(1-p)/n) at the empirical rate.
  double win_std_error() const { return binomial_se(win_rate()); }
  double tie_std_error() const { return binomial_se(tie_rate()); }
  double loss_std_error() const { return binomial_se(loss_rate()); }
  double expectation_std_error() const;

  friend bool operator==(const SimResult&, const SimResult&) = default;

 private:
  double rate(std::uint64_t count) const;
  double binomial_se(double p) const;
};

/// Plays `coups` independent coups in a single thread. Identical configs
/// give identical results. Throws std::invalid_argument when coups == 0.
SimResult simulate(const SimConfig& config);

}  // namespace chemin
