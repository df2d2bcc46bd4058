#pragma once

#include <array>

#include "chemin/rational.hpp"

namespace chemin {

/// Card values run 0..9: tens and face cards count 0, an ace counts 1.
inline constexpr int kCardValues = 10;

/// Distinct ranks in a suit. Four of the thirteen carry value 0.
inline constexpr int kRanks = 13;

/// Value of a rank index 0..12 (ace, 2..9, ten, jack, queen, king).
int rank_value(int rank);

/// Hand total of a card-value sum, i.e. the sum modulo 10.
int mod10(int sum);

/// Probability that a single dealt card has value `value`: 4/13 for 0, else 1/13.
/// Throws std::out_of_range outside 0..9.
Rational third_card_pdf(int value);

/// Probability that a two-card hand totals `total`: 25/169 for 0, else 16/169.
/// Throws std::out_of_range outside 0..9.
Rational two_card_pdf(int total);

/// The pair of elementary distributions used by every exact computation.
/// Cards are dealt with replacement, so no shoe state is carried.
struct CardModel {
  std::array<Rational, kCardValues> card;      // single card value
  std::array<Rational, kCardValues> two_card;  // two-card hand total

  /// p and q in closed form.
  static const CardModel& standard();
  /// Same p, with q rebuilt as the mod-10 convolution of p with itself.
  static CardModel convolved();
};

/// How a signed final-total difference (Player minus Banker) is scored.
enum class OutcomeFunctional { kWin, kTie, kSign };

int sgn(int x);
int apply(OutcomeFunctional f, int difference);

}  // namespace chemin
