#pragma once

#include <array>
#include <compare>
#include <span>
#include <string>
#include <vector>

#include "chemin/cards.hpp"
#include "chemin/rational.hpp"

namespace chemin {

/// Banker decision rows cover two-card totals 0..7; 8 and 9 are naturals.
inline constexpr int kBankerRows = 8;
/// Columns are Player's third card 0..9 followed by the stand column.
inline constexpr int kColumns = 11;
/// Column index used when Player stood (no third card to observe).
inline constexpr int kStand = 10;

struct Cell {
  int row = 0;
  int column = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// "0".."9" or "stand".
std::string column_label(int column);
/// "(j,k)" with k rendered by column_label.
std::string cell_label(const Cell& cell);

/// Banker's stand/draw incidence matrix. true means draw.
class DecisionTable {
 public:
  using Rows = std::array<std::array<bool, kColumns>, kBankerRows>;

  DecisionTable() = default;  // stands everywhere
  explicit DecisionTable(const Rows& rows) : rows_(rows) {}

  /// Builds a table from 0/1 rows; throws std::invalid_argument on other values.
  static DecisionTable from_ints(const std::array<std::array<int, kColumns>, kBankerRows>& rows);

  /// Throws std::out_of_range for an invalid cell.
  bool draws(int row, int column) const;
  void set(int row, int column, bool draw);
  void toggle(const Cell& cell);

  DecisionTable with_flips(std::span<const Cell> cells) const;
  /// Cells where the two tables disagree, row-major.
  std::vector<Cell> difference(const DecisionTable& other) const;

  const Rows& rows() const { return rows_; }

  friend bool operator==(const DecisionTable&, const DecisionTable&) = default;

 private:
  static void check(int row, int column);
  Rows rows_{};
};

/// Player's rule at a two-card total of 5, as assumed by Banker.
enum class PlayerStrategy { kNonTireur = 0, kTireur = 1 };

/// Banker's conditional expectation when standing at (row, column), given
/// that Player follows `strategy`.
Rational banker_stand_ev(PlayerStrategy strategy, int row, int column,
                         const CardModel& model = CardModel::standard());

/// Banker's conditional expectation when drawing at (row, column).
Rational banker_draw_ev(PlayerStrategy strategy, int row, int column,
                        const CardModel& model = CardModel::standard());

/// Draw exactly where drawing is strictly better; exact ties stand.
DecisionTable best_response_table(PlayerStrategy strategy);
DecisionTable best_response_table(PlayerStrategy strategy, const CardModel& model);

/// Cells where stand and draw expectations coincide exactly.
std::vector<Cell> tied_cells(PlayerStrategy strategy);

/// Best response when Player is a tireur with prior probability `pi`.
///
/// The two conditional expectations are mixed with the posterior class
/// weights: (1-pi)*89 : pi*105 after a third card (totals 0-4 vs 0-5 out of
/// 137 non-natural combinations) and (1-pi)*48 : pi*32 after a stand
/// (totals 5-7 vs 6-7). pi = 1/2 gives the equal-mixture table; other values
/// interpolate the same Bayesian weighting. Throws std::invalid_argument
/// unless 0 <= pi <= 1.
DecisionTable mixed_best_response(const Rational& pi);

/// Compares the unweighted averages of the non-tireur and tireur
/// expectations. This is the naive historical rule; it ignores that the two
/// classes are not equally likely once a draw or stand is observed.
DecisionTable dormoy_unweighted_response();

enum class Variant { kCorrect, kDormoy, kBadoureau };

/// A historical reading of the two tables, stored as cells toggled
/// relative to the correct best responses.
struct HistoricalVariant {
  Variant variant = Variant::kCorrect;
  std::string name;
  std::vector<Cell> flips_non_tireur;
  std::vector<Cell> flips_tireur;
  /// Cells the author declared indifferent. Not flips: the correct choice
  /// is kept and the cell is only flagged.
  std::vector<Cell> indifferent_non_tireur;
};

const HistoricalVariant& historical_variant(Variant variant);
/// Throws std::invalid_argument for an unknown name.
Variant parse_variant(std::string_view name);

DecisionTable historical_table(Variant variant, PlayerStrategy strategy);

}  // namespace chemin
