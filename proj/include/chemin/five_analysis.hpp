#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "chemin/banker_response.hpp"
#include "chemin/cards.hpp"
#include "chemin/rational.hpp"
#include "chemin/reference_values.hpp"

namespace chemin {

/// Player's decision when holding a two-card total of exactly 5.
enum class FiveAction { kStand = 0, kDraw = 1 };

/// Player's win and tie probabilities and expected profit per unit stake.
struct StatTriple {
  Rational win;
  Rational tie;
  Rational expectation;

  Rational loss() const { return Rational(1) - win - tie; }
  /// Win probability plus half the tie probability.
  Rational chances() const { return win + tie / Rational(2); }

  friend bool operator==(const StatTriple&, const StatTriple&) = default;
};

/// Expected value of `f(Player final - Banker final)` for a Player holding 5
/// who takes `action`, conditioned on Banker not holding a natural.
/// Banker plays `table`; the stand column is consulted when Player stands,
/// columns 0..9 when Player draws.
Rational five_functional(FiveAction action, const DecisionTable& table,
                         const std::function<int(int)>& f);
Rational five_functional(FiveAction action, const DecisionTable& table, OutcomeFunctional f);

/// W, T and E together. E is computed with the sign functional and checked
/// against 2W + T - 1; a mismatch throws std::logic_error.
StatTriple five_stats(FiveAction action, const DecisionTable& table);

/// The unconditional average (e0 + e1) / 2 of two expectations. Historically
/// used in place of the expectation against a mixed-response Banker, which
/// it is not.
Rational naive_average_ev(FiveAction action, const Rational& e0, const Rational& e1);

/// Absolute tolerance for six-decimal published values.
Rational six_decimal_tolerance();

struct BertrandScenario {
  FiveAction action = FiveAction::kStand;
  PlayerStrategy assumption = PlayerStrategy::kNonTireur;
  Variant variant = Variant::kCorrect;  // tables the scenario was computed from
  StatTriple stats;
  std::array<std::string, 3> rendered;   // W, T, E at six decimals
  std::array<std::string, 3> reference;  // published W, T, E
  std::array<Rational, 3> deviation;     // |computed - published|
  bool matches = false;                  // every deviation within tolerance
};

/// The four stand/draw x non-tireur/tireur scenarios against the published
/// six-decimal values. Scenarios (0,0), (0,1), (1,0) use the correct tables;
/// (1,1) uses `tireur_variant`'s tireur table, Badoureau's by default.
std::vector<BertrandScenario> bertrand_report(Variant tireur_variant = Variant::kBadoureau,
                                              const ReferenceValues& refs = published_reference());

}  // namespace chemin
