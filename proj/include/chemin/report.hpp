#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "chemin/banker_response.hpp"
#include "chemin/coup_analysis.hpp"
#include "chemin/five_analysis.hpp"
#include "chemin/montecarlo.hpp"
#include "chemin/rational.hpp"

namespace chemin::report {

enum class Format { kMarkdown, kCsv, kStructured };

struct NumberStyle {
  bool exact = false;
  int precision = 6;
};

/// Exact mode prints the canonical "p/q" ("n" for integers); decimal mode
/// rounds half away from zero to `precision` digits.
std::string render_fraction(const Rational& value, const NumberStyle& style);

/// "total,0,1,...,9,stand" header then eight LF-terminated 0/1 rows.
std::string table_csv(const DecisionTable& table);
std::string table_markdown(const DecisionTable& table);
/// {"columns": [...], "rows": [[0|1, ...], ...]}
std::string table_structured(const DecisionTable& table);

/// Inverse of table_csv. Throws std::invalid_argument on malformed input.
DecisionTable parse_table_csv(std::string_view text);
/// Reads the "rows" member of a structured table object.
DecisionTable parse_table_structured(std::string_view text);

/// Which Banker table to use.
enum class Assumption { kNonTireur, kTireur, kMixed, kUnweighted };
Assumption parse_assumption(std::string_view name);
std::string assumption_name(Assumption assumption);

struct ReportRequest {
  std::string command;  // tables, five, coup, bar-matrix, solve, compare, simulate
  Variant variant = Variant::kCorrect;
  Assumption assumption = Assumption::kNonTireur;
  Rational tireur_prior{1, 2};        // Banker's prior for kMixed
  std::string action = "stand";       // stand, draw, or mix (coup and simulate)
  Rational draw_probability{1, 2};    // Player's draw rate for action "mix"
  std::string matrix = "five";        // solve: five, bar, or custom
  std::optional<Matrix2> payoff;      // solve with matrix "custom"
  std::string against = "bertrand";   // compare: bertrand, badoureau, exact, coup, all
  std::uint64_t coups = 1'000'000;
  std::uint64_t seed = 1;
  Format format = Format::kMarkdown;
  NumberStyle style;
};

/// The Banker table named by (assumption, variant, tireur_prior).
DecisionTable resolve_table(const ReportRequest& request);

/// Renders a command. Throws std::invalid_argument for an invalid request
/// and std::logic_error if an internal consistency check fails.
std::string run(const ReportRequest& request);

}  // namespace chemin::report
