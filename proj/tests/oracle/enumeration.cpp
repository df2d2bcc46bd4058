#include "enumeration.hpp"

namespace chemin::oracle {

namespace {

constexpr int kRankCount = 13;

int value(int rank) { return rank < 9 ? rank + 1 : 0; }

void tally(Counts& c, int player, int banker) {
  ++c.total;
  if (player > banker) {
    ++c.wins;
  } else if (player == banker) {
    ++c.ties;
  } else {
    ++c.losses;
  }
}

bool player_draws_on(int total, bool draws_at_five) {
  return total <= 4 || (total == 5 && draws_at_five);
}

}  // namespace

Rational banker_ev(bool tireur, int row, int column, bool banker_draws) {
  std::int64_t score = 0;
  std::int64_t count = 0;
  for (int a = 0; a < kRankCount; ++a) {
    for (int b = 0; b < kRankCount; ++b) {
      const int player = (value(a) + value(b)) % 10;
      if (player >= 8) continue;
      const bool drew = player_draws_on(player, tireur);
      if (drew != (column != kStand)) continue;
      for (int c = 0; c < kRankCount; ++c) {
        if (drew && value(c) != column) continue;
        const int player_final = drew ? (player + value(c)) % 10 : player;
        for (int d = 0; d < kRankCount; ++d) {
          const int banker_final = banker_draws ? (row + value(d)) % 10 : row;
          score += (banker_final > player_final) - (banker_final < player_final);
          ++count;
        }
      }
    }
  }
  return Rational(score, count);
}

Counts five(bool player_draws, const DecisionTable& table) {
  Counts c;
  for (int b1 = 0; b1 < kRankCount; ++b1) {
    for (int b2 = 0; b2 < kRankCount; ++b2) {
      const int banker = (value(b1) + value(b2)) % 10;
      if (banker >= 8) continue;
      for (int p3 = 0; p3 < kRankCount; ++p3) {
        for (int b3 = 0; b3 < kRankCount; ++b3) {
          const int column = player_draws ? value(p3) : kStand;
          const int player_final = player_draws ? (5 + value(p3)) % 10 : 5;
          const int banker_final = table.draws(banker, column) ? (banker + value(b3)) % 10 : banker;
          tally(c, player_final, banker_final);
        }
      }
    }
  }
  return c;
}

Counts coup(bool draw_at_five, const DecisionTable& table) {
  Counts c;
  for (int p1 = 0; p1 < kRankCount; ++p1) {
    for (int p2 = 0; p2 < kRankCount; ++p2) {
      const int player = (value(p1) + value(p2)) % 10;
      for (int b1 = 0; b1 < kRankCount; ++b1) {
        for (int b2 = 0; b2 < kRankCount; ++b2) {
          const int banker = (value(b1) + value(b2)) % 10;
          for (int p3 = 0; p3 < kRankCount; ++p3) {
            for (int b3 = 0; b3 < kRankCount; ++b3) {
              if (player >= 8 || banker >= 8) {
                tally(c, player, banker);
                continue;
              }
              int player_final = player;
              int column = kStand;
              if (player_draws_on(player, draw_at_five)) {
                column = value(p3);
                player_final = (player + column) % 10;
              }
              const int banker_final =
                  table.draws(banker, column) ? (banker + value(b3)) % 10 : banker;
              tally(c, player_final, banker_final);
            }
          }
        }
      }
    }
  }
  return c;
}

}  // namespace chemin::oracle
