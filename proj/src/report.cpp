#include "chemin/report.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

namespace chemin::report {

namespace {

using json = nlohmann::ordered_json;

json integer_json(const Rational::Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

json fraction_json(const Rational& value, const NumberStyle& style) {
  json out;
  out["num"] = integer_json(value.num());
  out["den"] = integer_json(value.den());
  out["decimal"] = value.to_decimal(style.precision);
  return out;
}

json stats_json(const StatTriple& s, const NumberStyle& style) {
  json out;
  out["W"] = fraction_json(s.win, style);
  out["T"] = fraction_json(s.tie, style);
  out["E"] = fraction_json(s.expectation, style);
  out["L"] = fraction_json(s.loss(), style);
  out["C"] = fraction_json(s.chances(), style);
  return out;
}

json cells_json(const std::vector<Cell>& cells) {
  json out = json::array();
  for (const Cell& c : cells) out.push_back({{"row", c.row}, {"column", column_label(c.column)}});
  return out;
}

json matrix_json(const Matrix2& m, const NumberStyle& style) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(fraction_json(x, style));
    rows.push_back(r);
  }
  return rows;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string stats_line(const StatTriple& s, const NumberStyle& style) {
  return "W=" + render_fraction(s.win, style) + " T=" + render_fraction(s.tie, style) +
         " E=" + render_fraction(s.expectation, style) + "\n";
}

std::string stats_csv(const StatTriple& s, const NumberStyle& style) {
  std::string out = "quantity,value\n";
  out += "W," + render_fraction(s.win, style) + "\n";
  out += "T," + render_fraction(s.tie, style) + "\n";
  out += "E," + render_fraction(s.expectation, style) + "\n";
  out += "L," + render_fraction(s.loss(), style) + "\n";
  out += "C," + render_fraction(s.chances(), style) + "\n";
  return out;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

PlayerStrategy strategy_of(Assumption a) {
  return a == Assumption::kTireur ? PlayerStrategy::kTireur : PlayerStrategy::kNonTireur;
}

std::string table_title(const ReportRequest& r) {
  std::string title = "Banker best response: " + assumption_name(r.assumption);
  if (r.assumption == Assumption::kMixed) title += " (tireur prior " + r.tireur_prior.to_string() + ")";
  if (r.variant != Variant::kCorrect) title += ", variant " + historical_variant(r.variant).name;
  return title;
}

// Cells flipped away from the correct table and cells flagged as indifferent.
std::pair<std::vector<Cell>, std::vector<Cell>> variant_notes(const ReportRequest& r) {
  if (r.assumption != Assumption::kNonTireur && r.assumption != Assumption::kTireur) return {};
  const HistoricalVariant& v = historical_variant(r.variant);
  if (r.assumption == Assumption::kTireur) return {v.flips_tireur, {}};
  return {v.flips_non_tireur, v.indifferent_non_tireur};
}

std::string run_tables(const ReportRequest& r) {
  const DecisionTable table = resolve_table(r);
  const auto [flipped, indifferent] = variant_notes(r);
  const PlayerStrategy strategy = strategy_of(r.assumption);

  switch (r.format) {
    case Format::kCsv:
      return table_csv(table);
    case Format::kStructured: {
      json j = json::parse(table_structured(table));
      json out;
      out["command"] = "tables";
      out["strategy"] = assumption_name(r.assumption);
      if (r.assumption == Assumption::kMixed) out["tireur_prior"] = fraction_json(r.tireur_prior, r.style);
      out["variant"] = historical_variant(r.variant).name;
      out["columns"] = j["columns"];
      out["rows"] = j["rows"];
      out["flipped"] = cells_json(flipped);
      json near = json::array();
      for (const Cell& c : indifferent) {
        near.push_back({{"row", c.row},
                        {"column", column_label(c.column)},
                        {"stand_ev", fraction_json(banker_stand_ev(strategy, c.row, c.column), r.style)},
                        {"draw_ev", fraction_json(banker_draw_ev(strategy, c.row, c.column), r.style)}});
      }
      out["indifferent"] = near;
      return dump(out);
    }
    case Format::kMarkdown:
      break;
  }
  std::string out = "## " + table_title(r) + "\n\n" + table_markdown(table);
  if (!flipped.empty()) {
    out += "\nCells flipped relative to the correct table:";
    for (const Cell& c : flipped) out += " " + cell_label(c);
    out += "\n";
  }
  for (const Cell& c : indifferent) {
    out += "\nDeclared indifferent at " + cell_label(c) + " (kept as computed): stand " +
           render_fraction(banker_stand_ev(strategy, c.row, c.column), r.style) + ", draw " +
           render_fraction(banker_draw_ev(strategy, c.row, c.column), r.style) + "\n";
  }
  return out;
}

FiveAction five_action(const std::string& action) {
  if (action == "stand") return FiveAction::kStand;
  if (action == "draw") return FiveAction::kDraw;
  throw std::invalid_argument("five: --action must be stand or draw, got '" + action + "'");
}

FivePolicy coup_action(const ReportRequest& r) {
  if (r.action == "stand") return FivePolicy::stand();
  if (r.action == "draw") return FivePolicy::draw();
  if (r.action == "mix") return FivePolicy::mix(r.draw_probability);
  throw std::invalid_argument("--action must be stand, draw or mix, got '" + r.action + "'");
}

std::string render_stats(const std::string& command, const ReportRequest& r, const StatTriple& s,
                         json extra) {
  switch (r.format) {
    case Format::kCsv:
      return stats_csv(s, r.style);
    case Format::kStructured: {
      json out;
      out["command"] = command;
      for (auto& [k, v] : extra.items()) out[k] = v;
      out["stats"] = stats_json(s, r.style);
      return dump(out);
    }
    case Format::kMarkdown:
      break;
  }
  return stats_line(s, r.style);
}

std::string run_five(const ReportRequest& r) {
  const FiveAction action = five_action(r.action);
  const StatTriple s = five_stats(action, resolve_table(r));
  return render_stats("five", r, s,
                      {{"action", r.action},
                       {"assume", assumption_name(r.assumption)},
                       {"variant", historical_variant(r.variant).name}});
}

std::string run_coup(const ReportRequest& r) {
  const CoupPolicy policy{coup_action(r), resolve_table(r)};
  const StatTriple s = coup_stats(policy);
  return render_stats("coup", r, s,
                      {{"action", policy.five.describe()},
                       {"assume", assumption_name(r.assumption)},
                       {"variant", historical_variant(r.variant).name}});
}

const char* const kRowLabels[2] = {"P: stands at 5", "P: draws at 5"};
const char* const kColLabels[2] = {"B: assumes P stands at 5", "B: assumes P draws at 5"};

std::string matrix_markdown(const Matrix2& m, const NumberStyle& style) {
  std::string out = "| | " + std::string(kColLabels[0]) + " | " + kColLabels[1] + " |\n|---|---|---|\n";
  for (int u = 0; u < 2; ++u) {
    out += std::string("| ") + kRowLabels[u] + " | " + render_fraction(m[u][0], style) + " | " +
           render_fraction(m[u][1], style) + " |\n";
  }
  return out;
}

std::string matrix_csv(const Matrix2& m, const NumberStyle& style) {
  std::string out = "player,assumes_stand,assumes_draw\n";
  const char* names[2] = {"stand", "draw"};
  for (int u = 0; u < 2; ++u) {
    out += std::string(names[u]) + "," + render_fraction(m[u][0], style) + "," +
           render_fraction(m[u][1], style) + "\n";
  }
  return out;
}

std::string run_bar_matrix(const ReportRequest& r) {
  const Matrix2 m = bar_matrix();
  switch (r.format) {
    case Format::kCsv:
      return matrix_csv(m, r.style);
    case Format::kStructured:
      return dump({{"command", "bar-matrix"}, {"matrix", matrix_json(m, r.style)}});
    case Format::kMarkdown:
      break;
  }
  return "## Full-coup expectation matrix\n\n" + matrix_markdown(m, r.style);
}

std::string run_solve(const ReportRequest& r) {
  Matrix2 payoff;
  if (r.matrix == "five") {
    payoff = five_matrix();
  } else if (r.matrix == "bar") {
    payoff = bar_matrix();
  } else if (r.matrix == "custom") {
    if (!r.payoff) throw std::invalid_argument("solve: --matrix custom needs --payoff a,b,c,d");
    payoff = *r.payoff;
  } else {
    throw std::invalid_argument("solve: --matrix must be five, bar or custom, got '" + r.matrix + "'");
  }
  const TwoByTwoGame g = solve_2x2(payoff);
  const std::string kind = g.kind == SolutionKind::kSaddle ? "saddle" : "mixed";
  const NumberStyle& st = r.style;
  switch (r.format) {
    case Format::kCsv: {
      std::string out = "quantity,value\n";
      out += "kind," + kind + "\n";
      out += "value," + render_fraction(g.value, st) + "\n";
      out += "row_stand," + render_fraction(g.row_mix[0], st) + "\n";
      out += "row_draw," + render_fraction(g.row_mix[1], st) + "\n";
      out += "col_assumes_stand," + render_fraction(g.col_mix[0], st) + "\n";
      out += "col_assumes_draw," + render_fraction(g.col_mix[1], st) + "\n";
      return out;
    }
    case Format::kStructured: {
      json out;
      out["command"] = "solve";
      out["matrix_name"] = r.matrix;
      out["payoff"] = matrix_json(payoff, st);
      out["kind"] = kind;
      out["value"] = fraction_json(g.value, st);
      out["row_mix"] = {fraction_json(g.row_mix[0], st), fraction_json(g.row_mix[1], st)};
      out["col_mix"] = {fraction_json(g.col_mix[0], st), fraction_json(g.col_mix[1], st)};
      return dump(out);
    }
    case Format::kMarkdown:
      break;
  }
  std::string out = "## 2x2 zero-sum game (" + r.matrix + ")\n\n" + matrix_markdown(payoff, st);
  out += "\n- kind: " + kind + "\n";
  out += "- value: " + render_fraction(g.value, st) + "\n";
  out += "- Player mix (stand, draw): (" + render_fraction(g.row_mix[0], st) + ", " +
         render_fraction(g.row_mix[1], st) + ")\n";
  out += "- Banker mix (assumes stand, assumes draw): (" + render_fraction(g.col_mix[0], st) + ", " +
         render_fraction(g.col_mix[1], st) + ")\n";
  return out;
}

// One line of a comparison report.
struct CompareRow {
  std::string source;
  std::string scenario;
  std::string tables;
  StatTriple computed;
  std::array<std::string, 3> reference;
  std::array<Rational, 3> deviation;
  bool matches = false;
  std::string note;
};

std::string scenario_label(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

std::vector<CompareRow> bertrand_rows() {
  std::vector<CompareRow> rows;
  const auto correct = bertrand_report(Variant::kCorrect);
  const auto badoureau = bertrand_report(Variant::kBadoureau);
  for (const BertrandScenario& sc : correct) {
    const int u = static_cast<int>(sc.action);
    const int v = static_cast<int>(sc.assumption);
    rows.push_back({"bertrand", scenario_label(u, v), "correct", sc.stats, sc.reference, sc.deviation,
                    sc.matches, ""});
  }
  const BertrandScenario& last = badoureau.back();
  CompareRow row{"bertrand", scenario_label(1, 1), "badoureau", last.stats, last.reference,
                 last.deviation, last.matches, ""};
  if (last.matches && !correct.back().matches) {
    row.note = "matches only with Badoureau's erroneous D1";
    rows.back().note = "does not match the correct D1";
  }
  rows.push_back(row);
  return rows;
}

std::vector<CompareRow> exact_rows(const std::string& source, Variant variant) {
  std::vector<CompareRow> rows;
  const ReferenceValues& refs = published_reference();
  for (int u = 0; u < 2; ++u) {
    for (int v = 0; v < 2; ++v) {
      const Variant used = (u == 1 && v == 1) ? variant : Variant::kCorrect;
      const StatTriple s = five_stats(static_cast<FiveAction>(u),
                                      historical_table(used, static_cast<PlayerStrategy>(v)));
      const ReferenceTriple& ref = refs.triple(source, u, v);
      const std::array<Rational, 3> got = {s.win, s.tie, s.expectation};
      CompareRow row{source, scenario_label(u, v), historical_variant(used).name, s, ref.text, {}, true, ""};
      for (int i = 0; i < 3; ++i) {
        row.deviation[i] = abs(got[i] - ref.value[i]);
        row.matches = row.matches && row.deviation[i].is_zero();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<CompareRow> coup_rows() {
  const ReferenceTriple& ref = published_reference().triple("coup", 0, 0);
  const StatTriple s =
      coup_stats({FivePolicy::stand(), best_response_table(PlayerStrategy::kNonTireur)});
  const std::array<Rational, 3> got = {s.win, s.tie, s.expectation};
  CompareRow row{"coup", scenario_label(0, 0), "correct", s, ref.text, {}, true,
                 "full coup, naturals included"};
  for (int i = 0; i < 3; ++i) {
    row.deviation[i] = abs(got[i] - ref.value[i]);
    row.matches = row.matches && row.deviation[i].is_zero();
  }
  return {row};
}

std::string run_compare(const ReportRequest& r) {
  std::vector<CompareRow> rows;
  auto append = [&rows](std::vector<CompareRow> more) {
    rows.insert(rows.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  };
  const std::string& a = r.against;
  if (a == "bertrand" || a == "all") append(bertrand_rows());
  if (a == "badoureau" || a == "all") append(exact_rows("badoureau", Variant::kBadoureau));
  if (a == "exact" || a == "all") append(exact_rows("exact", Variant::kCorrect));
  if (a == "coup" || a == "all") append(coup_rows());
  if (rows.empty()) {
    throw std::invalid_argument("compare: --against must be bertrand, badoureau, exact, coup or all");
  }

  const NumberStyle& st = r.style;
  auto max_dev = [](const CompareRow& row) {
    return std::max({row.deviation[0], row.deviation[1], row.deviation[2]});
  };
  switch (r.format) {
    case Format::kCsv: {
      std::string out = "source,scenario,tables,W,T,E,ref_W,ref_T,ref_E,max_deviation,match,note\n";
      for (const auto& row : rows) {
        out += row.source + ",\"" + row.scenario + "\"," + row.tables + "," +
               render_fraction(row.computed.win, st) + "," + render_fraction(row.computed.tie, st) + "," +
               render_fraction(row.computed.expectation, st) + "," + row.reference[0] + "," +
               row.reference[1] + "," + row.reference[2] + "," + render_fraction(max_dev(row), st) + "," +
               (row.matches ? "yes" : "no") + "," + row.note + "\n";
      }
      return out;
    }
    case Format::kStructured: {
      json list = json::array();
      for (const auto& row : rows) {
        json j;
        j["source"] = row.source;
        j["scenario"] = row.scenario;
        j["tables"] = row.tables;
        j["stats"] = stats_json(row.computed, st);
        j["reference"] = {{"W", row.reference[0]}, {"T", row.reference[1]}, {"E", row.reference[2]}};
        j["max_deviation"] = fraction_json(max_dev(row), st);
        j["match"] = row.matches;
        j["note"] = row.note;
        list.push_back(j);
      }
      return dump({{"command", "compare"},
                   {"against", a},
                   {"decimal_tolerance", fraction_json(six_decimal_tolerance(), st)},
                   {"rows", list}});
    }
    case Format::kMarkdown:
      break;
  }
  std::string out = "## Comparison against published values (" + a + ")\n\n";
  out += "Decimal sources match within " + six_decimal_tolerance().to_decimal(6) +
         "; fractional sources must match exactly.\n\n";
  out += "| source | scenario | tables | W | T | E | published W | published T | published E | max abs deviation | match | note |\n";
  out += "|---|---|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& row : rows) {
    out += "| " + row.source + " | " + row.scenario + " | " + row.tables + " | " +
           render_fraction(row.computed.win, st) + " | " + render_fraction(row.computed.tie, st) + " | " +
           render_fraction(row.computed.expectation, st) + " | " + row.reference[0] + " | " +
           row.reference[1] + " | " + row.reference[2] + " | " +
           render_fraction(max_dev(row), NumberStyle{st.exact, std::max(st.precision, 9)}) + " | " +
           (row.matches ? "yes" : "no") + " | " + row.note + " |\n";
  }
  return out;
}

std::string run_simulate(const ReportRequest& r) {
  const CoupPolicy policy{coup_action(r), resolve_table(r)};
  const SimResult sim = simulate({r.coups, r.seed, policy});
  const StatTriple exact = coup_stats(policy);

  struct Line {
    const char* name;
    std::uint64_t count;
    double rate;
    double se;
    Rational exact;
  };
  const Line lines[] = {
      {"W", sim.wins, sim.win_rate(), sim.win_std_error(), exact.win},
      {"T", sim.ties, sim.tie_rate(), sim.tie_std_error(), exact.tie},
      {"L", sim.losses, sim.loss_rate(), sim.loss_std_error(), exact.loss()},
      {"E", 0, sim.expectation(), sim.expectation_std_error(), exact.expectation},
  };
  auto fixed = [](double x) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(6);
    os << x;
    return os.str();
  };
  auto z = [](const Line& l) { return l.se > 0 ? (l.rate - l.exact.to_double()) / l.se : 0.0; };

  switch (r.format) {
    case Format::kCsv: {
      std::string out = "quantity,count,rate,std_error,exact,z\n";
      for (const auto& l : lines) {
        out += std::string(l.name) + "," + (l.name[0] == 'E' ? "" : std::to_string(l.count)) + "," +
               fixed(l.rate) + "," + fixed(l.se) + "," + render_fraction(l.exact, r.style) + "," +
               fixed(z(l)) + "\n";
      }
      return out;
    }
    case Format::kStructured: {
      json out;
      out["command"] = "simulate";
      out["coups"] = sim.coups;
      out["seed"] = r.seed;
      out["action"] = policy.five.describe();
      out["assume"] = assumption_name(r.assumption);
      out["variant"] = historical_variant(r.variant).name;
      out["wins"] = sim.wins;
      out["ties"] = sim.ties;
      out["losses"] = sim.losses;
      json est;
      for (const auto& l : lines) est[l.name] = {{"rate", l.rate}, {"std_error", l.se}, {"z", z(l)}};
      out["empirical"] = est;
      out["stats"] = stats_json(exact, r.style);
      return dump(out);
    }
    case Format::kMarkdown:
      break;
  }
  std::string out = "## Monte Carlo: " + std::to_string(sim.coups) + " coups, seed " +
                    std::to_string(r.seed) + "\n\n";
  out += "Player at 5: " + policy.five.describe() + "; Banker: " + assumption_name(r.assumption) + "\n\n";
  out += "| quantity | count | rate | std. error | exact | z |\n|---|---|---|---|---|---|\n";
  for (const auto& l : lines) {
    out += std::string("| ") + l.name + " | " + (l.name[0] == 'E' ? "" : std::to_string(l.count)) +
           " | " + fixed(l.rate) + " | " + fixed(l.se) + " | " + render_fraction(l.exact, r.style) +
           " | " + fixed(z(l)) + " |\n";
  }
  return out;
}

}  // namespace

std::string render_fraction(const Rational& value, const NumberStyle& style) {
  return style.exact ? value.to_string() : value.to_decimal(style.precision);
}

std::string table_csv(const DecisionTable& table) {
  std::string out = "total";
  for (int k = 0; k < kColumns; ++k) out += "," + column_label(k);
  out += "\n";
  for (int j = 0; j < kBankerRows; ++j) {
    out += std::to_string(j);
    for (int k = 0; k < kColumns; ++k) out += table.draws(j, k) ? ",1" : ",0";
    out += "\n";
  }
  return out;
}

std::string table_markdown(const DecisionTable& table) {
  std::string out = "| total |";
  for (int k = 0; k < kColumns; ++k) out += " " + column_label(k) + " |";
  out += "\n|---|";
  for (int k = 0; k < kColumns; ++k) out += "---|";
  out += "\n";
  for (int j = 0; j < kBankerRows; ++j) {
    out += "| " + std::to_string(j) + " |";
    for (int k = 0; k < kColumns; ++k) out += table.draws(j, k) ? " 1 |" : " 0 |";
    out += "\n";
  }
  return out;
}

std::string table_structured(const DecisionTable& table) {
  json out;
  json columns = json::array();
  for (int k = 0; k < kColumns; ++k) columns.push_back(column_label(k));
  out["columns"] = columns;
  json rows = json::array();
  for (int j = 0; j < kBankerRows; ++j) {
    json row = json::array();
    for (int k = 0; k < kColumns; ++k) row.push_back(table.draws(j, k) ? 1 : 0);
    rows.push_back(row);
  }
  out["rows"] = rows;
  return dump(out);
}

DecisionTable parse_table_csv(std::string_view text) {
  std::vector<std::string> lines = split(text, '\n');
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.size() != kBankerRows + 1) {
    throw std::invalid_argument("table CSV needs a header and 8 rows, got " +
                                std::to_string(lines.size()) + " lines");
  }
  std::string expected_header = "total";
  for (int k = 0; k < kColumns; ++k) expected_header += "," + column_label(k);
  if (lines[0] != expected_header) throw std::invalid_argument("unexpected table CSV header: " + lines[0]);

  std::array<std::array<int, kColumns>, kBankerRows> rows{};
  for (int j = 0; j < kBankerRows; ++j) {
    const std::vector<std::string> fields = split(lines[j + 1], ',');
    if (fields.size() != kColumns + 1 || fields[0] != std::to_string(j)) {
      throw std::invalid_argument("malformed table CSV row " + std::to_string(j));
    }
    for (int k = 0; k < kColumns; ++k) {
      const std::string& f = fields[k + 1];
      if (f != "0" && f != "1") throw std::invalid_argument("table entries must be 0 or 1, got '" + f + "'");
      rows[j][k] = f == "1" ? 1 : 0;
    }
  }
  return DecisionTable::from_ints(rows);
}

DecisionTable parse_table_structured(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed structured table: ") + e.what());
  }
  if (!j.contains("rows") || !j["rows"].is_array() || j["rows"].size() != kBankerRows) {
    throw std::invalid_argument("structured table needs 8 rows");
  }
  std::array<std::array<int, kColumns>, kBankerRows> rows{};
  for (int r = 0; r < kBankerRows; ++r) {
    const json& row = j["rows"][r];
    if (!row.is_array() || row.size() != kColumns) {
      throw std::invalid_argument("structured table row " + std::to_string(r) + " needs 11 entries");
    }
    for (int k = 0; k < kColumns; ++k) {
      if (!row[k].is_number_integer()) throw std::invalid_argument("table entries must be integers");
      rows[r][k] = row[k].get<int>();
    }
  }
  return DecisionTable::from_ints(rows);
}

Assumption parse_assumption(std::string_view name) {
  if (name == "non-tireur") return Assumption::kNonTireur;
  if (name == "tireur") return Assumption::kTireur;
  if (name == "mixed") return Assumption::kMixed;
  if (name == "unweighted") return Assumption::kUnweighted;
  throw std::invalid_argument("unknown Banker assumption '" + std::string(name) +
                              "' (non-tireur, tireur, mixed, unweighted)");
}

std::string assumption_name(Assumption assumption) {
  switch (assumption) {
    case Assumption::kNonTireur:
      return "non-tireur";
    case Assumption::kTireur:
      return "tireur";
    case Assumption::kMixed:
      return "mixed";
    case Assumption::kUnweighted:
      return "unweighted";
  }
  throw std::invalid_argument("unknown Banker assumption");
}

DecisionTable resolve_table(const ReportRequest& r) {
  switch (r.assumption) {
    case Assumption::kNonTireur:
    case Assumption::kTireur:
      return historical_table(r.variant, strategy_of(r.assumption));
    case Assumption::kMixed:
    case Assumption::kUnweighted:
      if (r.variant != Variant::kCorrect) {
        throw std::invalid_argument("historical variants apply only to the non-tireur and tireur tables");
      }
      return r.assumption == Assumption::kMixed ? mixed_best_response(r.tireur_prior)
                                                : dormoy_unweighted_response();
  }
  throw std::invalid_argument("unknown Banker assumption");
}

std::string run(const ReportRequest& request) {
  if (request.style.precision < 1) throw std::invalid_argument("--precision must be at least 1");
  const std::string& c = request.command;
  if (c == "tables") return run_tables(request);
  if (c == "five") return run_five(request);
  if (c == "coup") return run_coup(request);
  if (c == "bar-matrix") return run_bar_matrix(request);
  if (c == "solve") return run_solve(request);
  if (c == "compare") return run_compare(request);
  if (c == "simulate") {
    if (request.coups == 0) throw std::invalid_argument("simulate: --coups must be at least 1");
    return run_simulate(request);
  }
  throw std::invalid_argument("unknown command '" + c + "'");
}

}  // namespace chemin::report
