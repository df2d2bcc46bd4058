#pragma once

// Brute-force reference computations for tests. Everything here enumerates
// raw card ranks (13 equally likely per card, dealt with replacement) and
// counts outcomes with plain integers; none of it uses the closed-form card
// distributions or any library routine it is meant to check.

#include <cstdint>

#include "chemin/banker_response.hpp"
#include "chemin/rational.hpp"

namespace chemin::oracle {

struct Counts {
  std::int64_t wins = 0;
  std::int64_t ties = 0;
  std::int64_t losses = 0;
  std::int64_t total = 0;  // tuples that satisfied the conditioning event

  Rational win() const { return Rational(wins, total); }
  Rational tie() const { return Rational(ties, total); }
  Rational loss() const { return Rational(losses, total); }
  Rational expectation() const { return Rational(wins - losses, total); }
};

/// Banker's expectation at (row, column) by enumerating Player's two cards,
/// Player's third card and Banker's third card. `tireur` selects whether a
/// Player on 5 draws.
Rational banker_ev(bool tireur, int row, int column, bool banker_draws);

/// Player holding 5 (stand or draw), Banker playing `table`, conditioned on
/// Banker holding no natural. Enumerates 13^4 tuples.
Counts five(bool player_draws, const DecisionTable& table);

/// One full coup over all 13^6 rank tuples. Player draws at 5 iff
/// `draw_at_five`.
Counts coup(bool draw_at_five, const DecisionTable& table);

}  // namespace chemin::oracle
