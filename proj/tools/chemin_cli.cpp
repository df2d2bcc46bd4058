// chemin: exact reports for baccarat chemin de fer.
//
// Exit status: 0 on success, 2 on a usage or argument error, 1 when an
// internal consistency check fails.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chemin/report.hpp"

namespace {

using chemin::Rational;
using chemin::report::Format;
using chemin::report::ReportRequest;

struct RawOptions {
  std::string variant = "correct";
  std::string assume = "non-tireur";
  std::string pi = "1/2";
  std::string draw_prob = "1/2";
  std::string payoff;
  std::string format = "markdown";
};

void add_output_options(CLI::App* cmd, ReportRequest& req, RawOptions& raw) {
  cmd->add_option("--format", raw.format, "markdown, csv or structured")
      ->check(CLI::IsMember({"markdown", "csv", "structured"}));
  cmd->add_option("--precision", req.style.precision, "Digits after the decimal point")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--exact", req.style.exact, "Print exact fractions");
}

void add_banker_options(CLI::App* cmd, RawOptions& raw, const std::string& flag) {
  cmd->add_option(flag, raw.assume, "Banker table: non-tireur, tireur, mixed or unweighted")
      ->check(CLI::IsMember({"non-tireur", "tireur", "mixed", "unweighted"}));
  cmd->add_option("--variant", raw.variant, "correct, dormoy or badoureau")
      ->check(CLI::IsMember({"correct", "dormoy", "badoureau"}));
  cmd->add_option("--pi", raw.pi, "Banker's prior that Player is a tireur (with mixed)");
}

chemin::Matrix2 parse_payoff(const std::string& text) {
  std::vector<Rational> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    values.push_back(Rational::parse(text.substr(start, comma == std::string::npos ? comma : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (values.size() != 4) throw std::invalid_argument("--payoff needs four values a,b,c,d");
  return {{{values[0], values[1]}, {values[2], values[3]}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of baccarat chemin de fer"};
  app.require_subcommand(1);

  ReportRequest req;
  RawOptions raw;

  auto* tables = app.add_subcommand("tables", "Banker best-response table");
  add_banker_options(tables, raw, "--strategy");
  add_output_options(tables, req, raw);

  auto* five = app.add_subcommand("five", "W, T, E for a Player holding 5");
  five->add_option("--action", req.action, "stand or draw")->check(CLI::IsMember({"stand", "draw"}));
  add_banker_options(five, raw, "--assume");
  add_output_options(five, req, raw);

  auto* coup = app.add_subcommand("coup", "W, T, E over a full coup");
  coup->add_option("--action", req.action, "stand, draw or mix at 5")
      ->check(CLI::IsMember({"stand", "draw", "mix"}));
  coup->add_option("--draw-prob", raw.draw_prob, "Player's draw probability at 5 (with mix)");
  add_banker_options(coup, raw, "--assume");
  add_output_options(coup, req, raw);

  auto* bar = app.add_subcommand("bar-matrix", "Full-coup 2x2 expectation matrix");
  add_output_options(bar, req, raw);

  auto* solve = app.add_subcommand("solve", "Solve a 2x2 zero-sum game");
  solve->add_option("--matrix", req.matrix, "five, bar or custom")
      ->check(CLI::IsMember({"five", "bar", "custom"}));
  solve->add_option("--payoff", raw.payoff, "a,b,c,d for --matrix custom (row-major)");
  add_output_options(solve, req, raw);

  auto* compare = app.add_subcommand("compare", "Compare with published values");
  compare->add_option("--against", req.against, "bertrand, badoureau, exact, coup or all")
      ->check(CLI::IsMember({"bertrand", "badoureau", "exact", "coup", "all"}));
  add_output_options(compare, req, raw);

  auto* sim = app.add_subcommand("simulate", "Seeded Monte Carlo check of coup statistics");
  sim->add_option("--coups", req.coups, "Number of coups")->check(CLI::PositiveNumber);
  sim->add_option("--seed", req.seed, "64-bit seed");
  sim->add_option("--action", req.action, "stand, draw or mix at 5")
      ->check(CLI::IsMember({"stand", "draw", "mix"}));
  sim->add_option("--draw-prob", raw.draw_prob, "Player's draw probability at 5 (with mix)");
  add_banker_options(sim, raw, "--assume");
  add_output_options(sim, req, raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    req.command = app.get_subcommands().front()->get_name();
    static const std::map<std::string, Format> formats = {
        {"markdown", Format::kMarkdown}, {"csv", Format::kCsv}, {"structured", Format::kStructured}};
    req.format = formats.at(raw.format);
    req.variant = chemin::parse_variant(raw.variant);
    req.assumption = chemin::report::parse_assumption(raw.assume);
    req.tireur_prior = Rational::parse(raw.pi);
    req.draw_probability = Rational::parse(raw.draw_prob);
    if (!raw.payoff.empty()) req.payoff = parse_payoff(raw.payoff);
    std::cout << chemin::report::run(req);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
