#pragma once

#include <array>
#include <string>

#include "chemin/banker_response.hpp"
#include "chemin/five_analysis.hpp"
#include "chemin/rational.hpp"

namespace chemin {

/// Player's behaviour at a two-card total of 5: stand, draw, or draw with
/// probability pi.
class FivePolicy {
 public:
  static FivePolicy stand() { return FivePolicy(Rational(0)); }
  static FivePolicy draw() { return FivePolicy(Rational(1)); }
  /// Throws std::invalid_argument unless 0 <= pi <= 1.
  static FivePolicy mix(const Rational& pi);

  const Rational& draw_probability() const { return draw_probability_; }
  std::string describe() const;

  friend bool operator==(const FivePolicy&, const FivePolicy&) = default;

 private:
  explicit FivePolicy(Rational pi) : draw_probability_(std::move(pi)) {}
  Rational draw_probability_;
};

/// Full-coup policy pair. Player otherwise follows the mandatory rule
/// (draw on 0-4, stand on 6-7); Banker's table applies only when neither
/// hand is a natural.
struct CoupPolicy {
  FivePolicy five = FivePolicy::stand();
  DecisionTable banker;
};

/// Exact Player statistics over an arbitrary coup, naturals included.
/// Two naturals are compared on total; equal totals tie.
StatTriple coup_stats(const CoupPolicy& policy);

using Matrix2 = std::array<std::array<Rational, 2>, 2>;

/// Full-coup expectations: entry (u,v) is Player standing (u=0) or drawing
/// (u=1) at 5 while Banker best-responds to a non-tireur (v=0) or tireur (v=1).
Matrix2 bar_matrix();

/// Expectations conditioned on Player holding 5, same row/column meaning.
Matrix2 five_matrix();

enum class SolutionKind { kSaddle, kMixed };

/// Solution of a two-person zero-sum 2x2 game; the row player maximises.
struct TwoByTwoGame {
  Matrix2 payoff;
  Rational value;
  std::array<Rational, 2> row_mix;  // probabilities of rows 0 and 1
  std::array<Rational, 2> col_mix;  // probabilities of columns 0 and 1
  SolutionKind kind = SolutionKind::kSaddle;
};

/// Pure saddle points are preferred when one exists; otherwise returns the
/// unique equalising mixed solution. All arithmetic is exact.
TwoByTwoGame solve_2x2(const Matrix2& payoff);

}  // namespace chemin
