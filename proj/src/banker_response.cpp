#include "chemin/banker_response.hpp"

#include <stdexcept>
#include <string>

namespace chemin {

namespace {

struct TotalRange {
  int first;
  int last;  // inclusive
};

// Player totals that can lie behind an observed third card (drew) or a
// stand. A non-tireur draws on 0-4 and stands on 5-7; a tireur also draws
// on 5.
TotalRange player_totals(PlayerStrategy strategy, int column) {
  const int u = static_cast<int>(strategy);
  if (column == kStand) return {5 + u, 7};
  return {0, 4 + u};
}

int player_final(int total, int column) {
  return column == kStand ? total : mod10(total + column);
}

void check_indices(int row, int column) {
  if (row < 0 || row >= kBankerRows) {
    throw std::out_of_range("banker total out of range: " + std::to_string(row));
  }
  if (column < 0 || column >= kColumns) {
    throw std::out_of_range("table column out of range: " + std::to_string(column));
  }
}

Rational banker_ev(PlayerStrategy strategy, int row, int column, bool draw,
                   const CardModel& model) {
  check_indices(row, column);
  const auto [first, last] = player_totals(strategy, column);
  Rational weighted;
  Rational mass;
  for (int i = first; i <= last; ++i) {
    const int player = player_final(i, column);
    const Rational& weight = model.two_card[i];
    mass += weight;
    if (!draw) {
      weighted += weight * sgn(row - player);
      continue;
    }
    Rational inner;
    for (int l = 0; l < kCardValues; ++l) inner += model.card[l] * sgn(mod10(row + l) - player);
    weighted += weight * inner;
  }
  return weighted / mass;
}

DecisionTable compute_best_response(PlayerStrategy strategy, const CardModel& model) {
  DecisionTable table;
  for (int j = 0; j < kBankerRows; ++j) {
    for (int k = 0; k < kColumns; ++k) {
      table.set(j, k, banker_draw_ev(strategy, j, k, model) > banker_stand_ev(strategy, j, k, model));
    }
  }
  return table;
}

}  // namespace

std::string column_label(int column) {
  if (column == kStand) return "stand";
  if (column < 0 || column > kStand) throw std::out_of_range("table column out of range");
  return std::to_string(column);
}

std::string cell_label(const Cell& cell) {
  return "(" + std::to_string(cell.row) + "," + column_label(cell.column) + ")";
}

DecisionTable DecisionTable::from_ints(
    const std::array<std::array<int, kColumns>, kBankerRows>& rows) {
  DecisionTable table;
  for (int j = 0; j < kBankerRows; ++j) {
    for (int k = 0; k < kColumns; ++k) {
      const int v = rows[j][k];
      if (v != 0 && v != 1) throw std::invalid_argument("decision table entries must be 0 or 1");
      table.rows_[j][k] = v == 1;
    }
  }
  return table;
}

void DecisionTable::check(int row, int column) {
  if (row < 0 || row >= kBankerRows || column < 0 || column >= kColumns) {
    throw std::out_of_range("decision table cell " + std::to_string(row) + "," +
                            std::to_string(column) + " out of range");
  }
}

bool DecisionTable::draws(int row, int column) const {
  check(row, column);
  return rows_[row][column];
}

void DecisionTable::set(int row, int column, bool draw) {
  check(row, column);
  rows_[row][column] = draw;
}

void DecisionTable::toggle(const Cell& cell) {
  check(cell.row, cell.column);
  rows_[cell.row][cell.column] = !rows_[cell.row][cell.column];
}

DecisionTable DecisionTable::with_flips(std::span<const Cell> cells) const {
  DecisionTable out = *this;
  for (const Cell& c : cells) out.toggle(c);
  return out;
}

std::vector<Cell> DecisionTable::difference(const DecisionTable& other) const {
  std::vector<Cell> cells;
  for (int j = 0; j < kBankerRows; ++j) {
    for (int k = 0; k < kColumns; ++k) {
      if (rows_[j][k] != other.rows_[j][k]) cells.push_back({j, k});
    }
  }
  return cells;
}

Rational banker_stand_ev(PlayerStrategy strategy, int row, int column, const CardModel& model) {
  return banker_ev(strategy, row, column, false, model);
}

Rational banker_draw_ev(PlayerStrategy strategy, int row, int column, const CardModel& model) {
  return banker_ev(strategy, row, column, true, model);
}

DecisionTable best_response_table(PlayerStrategy strategy) {
  static const std::array<DecisionTable, 2> tables = {
      compute_best_response(PlayerStrategy::kNonTireur, CardModel::standard()),
      compute_best_response(PlayerStrategy::kTireur, CardModel::standard())};
  return tables[static_cast<int>(strategy)];
}

DecisionTable best_response_table(PlayerStrategy strategy, const CardModel& model) {
  return compute_best_response(strategy, model);
}

std::vector<Cell> tied_cells(PlayerStrategy strategy) {
  std::vector<Cell> cells;
  for (int j = 0; j < kBankerRows; ++j) {
    for (int k = 0; k < kColumns; ++k) {
      if (banker_draw_ev(strategy, j, k) == banker_stand_ev(strategy, j, k)) cells.push_back({j, k});
    }
  }
  return cells;
}

DecisionTable mixed_best_response(const Rational& pi) {
  if (pi < Rational(0) || pi > Rational(1)) {
    throw std::invalid_argument("tireur probability must lie in [0,1], got " + pi.to_string());
  }
  DecisionTable table;
  for (int j = 0; j < kBankerRows; ++j) {
    for (int k = 0; k < kColumns; ++k) {
      const bool stood = k == kStand;
      const Rational w0 = (Rational(1) - pi) * (stood ? 48 : 89);
      const Rational w1 = pi * (stood ? 32 : 105);
      const Rational draw = w0 * banker_draw_ev(PlayerStrategy::kNonTireur, j, k) +
                            w1 * banker_draw_ev(PlayerStrategy::kTireur, j, k);
      const Rational stand = w0 * banker_stand_ev(PlayerStrategy::kNonTireur, j, k) +
                             w1 * banker_stand_ev(PlayerStrategy::kTireur, j, k);
      table.set(j, k, draw > stand);
    }
  }
  return table;
}

DecisionTable dormoy_unweighted_response() {
  DecisionTable table;
  for (int j = 0; j < kBankerRows; ++j) {
    for (int k = 0; k < kColumns; ++k) {
      const Rational draw = banker_draw_ev(PlayerStrategy::kNonTireur, j, k) +
                            banker_draw_ev(PlayerStrategy::kTireur, j, k);
      const Rational stand = banker_stand_ev(PlayerStrategy::kNonTireur, j, k) +
                             banker_stand_ev(PlayerStrategy::kTireur, j, k);
      table.set(j, k, draw > stand);
    }
  }
  return table;
}

const HistoricalVariant& historical_variant(Variant variant) {
  static const HistoricalVariant correct{Variant::kCorrect, "correct", {}, {}, {}};
  static const HistoricalVariant dormoy{Variant::kDormoy, "dormoy", {}, {{6, 6}}, {{5, 4}}};
  static const HistoricalVariant badoureau{
      Variant::kBadoureau, "badoureau", {}, {{4, 1}, {4, 9}, {6, 6}}, {}};
  switch (variant) {
    case Variant::kCorrect:
      return correct;
    case Variant::kDormoy:
      return dormoy;
    case Variant::kBadoureau:
      return badoureau;
  }
  throw std::invalid_argument("unknown historical variant");
}

Variant parse_variant(std::string_view name) {
  if (name == "correct") return Variant::kCorrect;
  if (name == "dormoy") return Variant::kDormoy;
  if (name == "badoureau") return Variant::kBadoureau;
  throw std::invalid_argument("unknown variant '" + std::string(name) + "'");
}

DecisionTable historical_table(Variant variant, PlayerStrategy strategy) {
  const HistoricalVariant& v = historical_variant(variant);
  const auto& flips =
      strategy == PlayerStrategy::kNonTireur ? v.flips_non_tireur : v.flips_tireur;
  return best_response_table(strategy).with_flips(flips);
}

}  // namespace chemin
