#include "chemin/coup_analysis.hpp"

#include <stdexcept>

namespace chemin {

namespace {

bool is_natural(int total) { return total >= 8; }

// Accumulates probability mass by the sign of Player final minus Banker final.
struct OutcomeMass {
  Rational win;
  Rational tie;
  Rational loss;

  void add(int difference, const Rational& weight) {
    if (difference > 0) {
      win += weight;
    } else if (difference == 0) {
      tie += weight;
    } else {
      loss += weight;
    }
  }
};

void banker_acts(OutcomeMass& mass, const CardModel& m, const DecisionTable& table, int banker,
                 int column, int player, const Rational& weight) {
  if (!table.draws(banker, column)) {
    mass.add(player - banker, weight);
    return;
  }
  for (int l = 0; l < kCardValues; ++l) mass.add(player - mod10(banker + l), weight * m.card[l]);
}

OutcomeMass coup_mass(const DecisionTable& table, const Rational& draw_at_five) {
  const CardModel& m = CardModel::standard();
  const Rational stand_at_five = Rational(1) - draw_at_five;
  OutcomeMass mass;
  for (int player = 0; player < kCardValues; ++player) {
    for (int banker = 0; banker < kCardValues; ++banker) {
      const Rational deal = m.two_card[player] * m.two_card[banker];
      if (is_natural(player) || is_natural(banker)) {
        mass.add(player - banker, deal);
        continue;
      }
      Rational draw_weight;
      Rational stand_weight;
      if (player <= 4) {
        draw_weight = deal;
      } else if (player == 5) {
        draw_weight = deal * draw_at_five;
        stand_weight = deal * stand_at_five;
      } else {
        stand_weight = deal;
      }
      if (!stand_weight.is_zero()) banker_acts(mass, m, table, banker, kStand, player, stand_weight);
      if (draw_weight.is_zero()) continue;
      for (int k = 0; k < kCardValues; ++k) {
        banker_acts(mass, m, table, banker, k, mod10(player + k), draw_weight * m.card[k]);
      }
    }
  }
  return mass;
}

}  // namespace

FivePolicy FivePolicy::mix(const Rational& pi) {
  if (pi < Rational(0) || pi > Rational(1)) {
    throw std::invalid_argument("draw probability at 5 must lie in [0,1], got " + pi.to_string());
  }
  return FivePolicy(pi);
}

std::string FivePolicy::describe() const {
  if (draw_probability_ == Rational(0)) return "stand";
  if (draw_probability_ == Rational(1)) return "draw";
  return "mix(" + draw_probability_.to_string() + ")";
}

StatTriple coup_stats(const CoupPolicy& policy) {
  const OutcomeMass mass = coup_mass(policy.banker, policy.five.draw_probability());
  if (mass.win + mass.tie + mass.loss != Rational(1)) {
    throw std::logic_error("coup_stats: outcome probabilities do not sum to 1");
  }
  return {mass.win, mass.tie, mass.win - mass.loss};
}

Matrix2 bar_matrix() {
  Matrix2 out;
  for (int u = 0; u < 2; ++u) {
    for (int v = 0; v < 2; ++v) {
      const CoupPolicy policy{u == 0 ? FivePolicy::stand() : FivePolicy::draw(),
                              best_response_table(static_cast<PlayerStrategy>(v))};
      out[u][v] = coup_stats(policy).expectation;
    }
  }
  return out;
}

Matrix2 five_matrix() {
  Matrix2 out;
  for (int u = 0; u < 2; ++u) {
    for (int v = 0; v < 2; ++v) {
      out[u][v] = five_functional(static_cast<FiveAction>(u),
                                  best_response_table(static_cast<PlayerStrategy>(v)),
                                  OutcomeFunctional::kSign);
    }
  }
  return out;
}

TwoByTwoGame solve_2x2(const Matrix2& payoff) {
  TwoByTwoGame game;
  game.payoff = payoff;

  // A cell that is the minimum of its row and the maximum of its column.
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const Rational& x = payoff[r][c];
      if (x <= payoff[r][1 - c] && x >= payoff[1 - r][c]) {
        game.kind = SolutionKind::kSaddle;
        game.value = x;
        game.row_mix = {Rational(r == 0 ? 1 : 0), Rational(r == 0 ? 0 : 1)};
        game.col_mix = {Rational(c == 0 ? 1 : 0), Rational(c == 0 ? 0 : 1)};
        return game;
      }
    }
  }

  const Rational& a = payoff[0][0];
  const Rational& b = payoff[0][1];
  const Rational& c = payoff[1][0];
  const Rational& d = payoff[1][1];
  const Rational denom = a - b - c + d;
  if (denom.is_zero()) throw std::logic_error("solve_2x2: no saddle point and singular game");

  game.kind = SolutionKind::kMixed;
  game.value = (a * d - b * c) / denom;
  const Rational row0 = (d - c) / denom;
  const Rational col0 = (d - b) / denom;
  game.row_mix = {row0, Rational(1) - row0};
  game.col_mix = {col0, Rational(1) - col0};
  return game;
}

}  // namespace chemin
