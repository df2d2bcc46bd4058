#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "chemin/banker_response.hpp"
#include "chemin/coup_analysis.hpp"
#include "chemin/five_analysis.hpp"
#include "chemin/montecarlo.hpp"
#include "chemin/report.hpp"

namespace py = pybind11;
using namespace chemin;

namespace {

// Rationals cross the boundary as fractions.Fraction.
py::object to_fraction(const Rational& r) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  py::object as_int = py::module_::import("builtins").attr("int");
  return fraction(as_int(r.num().str()), as_int(r.den().str()));
}

Rational from_python(const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) return Rational::parse(obj.cast<std::string>());
  if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator") && !py::isinstance<py::float_>(obj)) {
    return Rational(Rational::Integer(py::str(obj.attr("numerator")).cast<std::string>()),
                    Rational::Integer(py::str(obj.attr("denominator")).cast<std::string>()));
  }
  throw py::type_error("expected an int, fractions.Fraction or string such as '1/2'");
}

PlayerStrategy strategy_from(const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) {
    const auto s = obj.cast<std::string>();
    if (s == "non-tireur") return PlayerStrategy::kNonTireur;
    if (s == "tireur") return PlayerStrategy::kTireur;
  } else if (py::isinstance<py::int_>(obj)) {
    const int u = obj.cast<int>();
    if (u == 0 || u == 1) return static_cast<PlayerStrategy>(u);
  }
  throw py::value_error("strategy must be 'non-tireur', 'tireur', 0 or 1");
}

FiveAction action_from(const std::string& s) {
  if (s == "stand") return FiveAction::kStand;
  if (s == "draw") return FiveAction::kDraw;
  throw py::value_error("action must be 'stand' or 'draw'");
}

FivePolicy policy_from(const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) {
    const auto s = obj.cast<std::string>();
    if (s == "stand") return FivePolicy::stand();
    if (s == "draw") return FivePolicy::draw();
    throw py::value_error("action must be 'stand', 'draw' or a draw probability");
  }
  return FivePolicy::mix(from_python(obj));
}

py::list matrix_to_list(const Matrix2& m) {
  py::list rows;
  for (const auto& row : m) rows.append(py::make_tuple(to_fraction(row[0]), to_fraction(row[1])));
  return rows;
}

Matrix2 matrix_from(const py::sequence& rows) {
  if (py::len(rows) != 2) throw py::value_error("payoff must be 2x2");
  Matrix2 m;
  for (int r = 0; r < 2; ++r) {
    py::sequence row = rows[r];
    if (py::len(row) != 2) throw py::value_error("payoff must be 2x2");
    for (int c = 0; c < 2; ++c) m[r][c] = from_python(row[c]);
  }
  return m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact baccarat chemin de fer analysis (C++ core)";
  m.attr("STAND") = kStand;

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::invalid_argument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("third_card_pdf", [](int i) { return to_fraction(third_card_pdf(i)); }, py::arg("value"));
  m.def("two_card_pdf", [](int j) { return to_fraction(two_card_pdf(j)); }, py::arg("total"));
  m.def("mod10", &mod10, py::arg("sum"));

  py::class_<DecisionTable>(m, "DecisionTable")
      .def(py::init([](const std::vector<std::vector<int>>& rows) {
             if (rows.size() != kBankerRows) throw py::value_error("table needs 8 rows");
             std::array<std::array<int, kColumns>, kBankerRows> a{};
             for (int j = 0; j < kBankerRows; ++j) {
               if (rows[j].size() != kColumns) throw py::value_error("each row needs 11 entries");
               for (int k = 0; k < kColumns; ++k) a[j][k] = rows[j][k];
             }
             return DecisionTable::from_ints(a);
           }),
           py::arg("rows"))
      .def("draws", &DecisionTable::draws, py::arg("row"), py::arg("column"))
      .def("rows",
           [](const DecisionTable& t) {
             std::vector<std::vector<int>> out(kBankerRows, std::vector<int>(kColumns));
             for (int j = 0; j < kBankerRows; ++j)
               for (int k = 0; k < kColumns; ++k) out[j][k] = t.draws(j, k) ? 1 : 0;
             return out;
           })
      .def("difference",
           [](const DecisionTable& a, const DecisionTable& b) {
             std::vector<std::pair<int, int>> out;
             for (const Cell& c : a.difference(b)) out.emplace_back(c.row, c.column);
             return out;
           })
      .def("to_csv", &report::table_csv)
      .def_static("from_csv", [](const std::string& s) { return report::parse_table_csv(s); })
      .def(py::self == py::self)
      .def("__repr__", [](const DecisionTable& t) { return "DecisionTable(\n" + report::table_csv(t) + ")"; });

  m.def("banker_stand_ev",
        [](const py::object& s, int row, int column) { return to_fraction(banker_stand_ev(strategy_from(s), row, column)); },
        py::arg("strategy"), py::arg("row"), py::arg("column"));
  m.def("banker_draw_ev",
        [](const py::object& s, int row, int column) { return to_fraction(banker_draw_ev(strategy_from(s), row, column)); },
        py::arg("strategy"), py::arg("row"), py::arg("column"));
  m.def("best_response_table", [](const py::object& s) { return best_response_table(strategy_from(s)); },
        py::arg("strategy"));
  m.def("mixed_best_response", [](const py::object& pi) { return mixed_best_response(from_python(pi)); },
        py::arg("pi"));
  m.def("dormoy_unweighted_response", &dormoy_unweighted_response);
  m.def("historical_table",
        [](const std::string& variant, const py::object& s) {
          return historical_table(parse_variant(variant), strategy_from(s));
        },
        py::arg("variant"), py::arg("strategy"));

  py::class_<StatTriple>(m, "StatTriple")
      .def_property_readonly("win", [](const StatTriple& s) { return to_fraction(s.win); })
      .def_property_readonly("tie", [](const StatTriple& s) { return to_fraction(s.tie); })
      .def_property_readonly("expectation", [](const StatTriple& s) { return to_fraction(s.expectation); })
      .def_property_readonly("loss", [](const StatTriple& s) { return to_fraction(s.loss()); })
      .def_property_readonly("chances", [](const StatTriple& s) { return to_fraction(s.chances()); })
      .def("__repr__", [](const StatTriple& s) {
        return "StatTriple(W=" + s.win.to_string() + ", T=" + s.tie.to_string() + ", E=" + s.expectation.to_string() + ")";
      });

  m.def("five_stats", [](const std::string& a, const DecisionTable& t) { return five_stats(action_from(a), t); },
        py::arg("action"), py::arg("table"));
  m.def("naive_average_ev",
        [](const std::string& a, const py::object& e0, const py::object& e1) {
          return to_fraction(naive_average_ev(action_from(a), from_python(e0), from_python(e1)));
        },
        py::arg("action"), py::arg("e0"), py::arg("e1"));
  m.def("coup_stats",
        [](const py::object& action, const DecisionTable& t) { return coup_stats({policy_from(action), t}); },
        py::arg("action"), py::arg("table"),
        "action is 'stand', 'draw' or a draw probability at 5");
  m.def("bar_matrix", [] { return matrix_to_list(bar_matrix()); });
  m.def("five_matrix", [] { return matrix_to_list(five_matrix()); });
  m.def("solve_2x2",
        [](const py::sequence& payoff) {
          const TwoByTwoGame g = solve_2x2(matrix_from(payoff));
          py::dict out;
          out["kind"] = g.kind == SolutionKind::kSaddle ? "saddle" : "mixed";
          out["value"] = to_fraction(g.value);
          out["row_mix"] = py::make_tuple(to_fraction(g.row_mix[0]), to_fraction(g.row_mix[1]));
          out["col_mix"] = py::make_tuple(to_fraction(g.col_mix[0]), to_fraction(g.col_mix[1]));
          return out;
        },
        py::arg("payoff"));

  py::class_<SimResult>(m, "SimResult")
      .def_readonly("coups", &SimResult::coups)
      .def_readonly("wins", &SimResult::wins)
      .def_readonly("ties", &SimResult::ties)
      .def_readonly("losses", &SimResult::losses)
      .def("win_rate", &SimResult::win_rate)
      .def("tie_rate", &SimResult::tie_rate)
      .def("loss_rate", &SimResult::loss_rate)
      .def("expectation", &SimResult::expectation)
      .def("expectation_std_error", &SimResult::expectation_std_error);

  m.def("simulate",
        [](std::uint64_t coups, std::uint64_t seed, const py::object& action, const DecisionTable& t) {
          const SimConfig config{coups, seed, {policy_from(action), t}};
          py::gil_scoped_release release;
          return simulate(config);
        },
        py::arg("coups"), py::arg("seed"), py::arg("action"), py::arg("table"));

  m.def("render_fraction",
        [](const py::object& value, bool exact, int precision) {
          return report::render_fraction(from_python(value), {exact, precision});
        },
        py::arg("value"), py::arg("exact") = false, py::arg("precision") = 6);
}
