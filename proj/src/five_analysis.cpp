#include "chemin/five_analysis.hpp"

#include <stdexcept>

namespace chemin {

namespace {

constexpr int kPlayerFive = 5;

}  // namespace

Rational five_functional(FiveAction action, const DecisionTable& table,
                         const std::function<int(int)>& f) {
  const CardModel& m = CardModel::standard();
  Rational sum;
  Rational mass;
  for (int j = 0; j < kBankerRows; ++j) {
    mass += m.two_card[j];
    if (action == FiveAction::kStand) {
      if (table.draws(j, kStand)) {
        for (int l = 0; l < kCardValues; ++l) {
          sum += m.two_card[j] * m.card[l] * f(kPlayerFive - mod10(j + l));
        }
      } else {
        sum += m.two_card[j] * f(kPlayerFive - j);
      }
      continue;
    }
    for (int k = 0; k < kCardValues; ++k) {
      const int player = mod10(kPlayerFive + k);
      const Rational weight = m.two_card[j] * m.card[k];
      if (table.draws(j, k)) {
        for (int l = 0; l < kCardValues; ++l) sum += weight * m.card[l] * f(player - mod10(j + l));
      } else {
        sum += weight * f(player - j);
      }
    }
  }
  return sum / mass;
}

Rational five_functional(FiveAction action, const DecisionTable& table, OutcomeFunctional f) {
  return five_functional(action, table, [f](int d) { return apply(f, d); });
}

StatTriple five_stats(FiveAction action, const DecisionTable& table) {
  StatTriple s{five_functional(action, table, OutcomeFunctional::kWin),
               five_functional(action, table, OutcomeFunctional::kTie),
               five_functional(action, table, OutcomeFunctional::kSign)};
  if (s.expectation != Rational(2) * s.win + s.tie - Rational(1)) {
    throw std::logic_error("five_stats: E disagrees with 2W + T - 1");
  }
  return s;
}

Rational naive_average_ev(FiveAction /*action*/, const Rational& e0, const Rational& e1) {
  return (e0 + e1) / Rational(2);
}

Rational six_decimal_tolerance() { return Rational(1, 1'000'000); }

std::vector<BertrandScenario> bertrand_report(Variant tireur_variant, const ReferenceValues& refs) {
  std::vector<BertrandScenario> out;
  const Rational tolerance = six_decimal_tolerance();
  for (int u = 0; u < 2; ++u) {
    for (int v = 0; v < 2; ++v) {
      BertrandScenario sc;
      sc.action = static_cast<FiveAction>(u);
      sc.assumption = static_cast<PlayerStrategy>(v);
      sc.variant = (u == 1 && v == 1) ? tireur_variant : Variant::kCorrect;
      sc.stats = five_stats(sc.action, historical_table(sc.variant, sc.assumption));
      const ReferenceTriple& ref = refs.triple("bertrand", u, v);
      const std::array<Rational, 3> computed = {sc.stats.win, sc.stats.tie, sc.stats.expectation};
      sc.matches = true;
      for (int i = 0; i < 3; ++i) {
        sc.rendered[i] = computed[i].to_decimal(6);
        sc.reference[i] = ref.text[i];
        sc.deviation[i] = abs(computed[i] - ref.value[i]);
        sc.matches = sc.matches && sc.deviation[i] <= tolerance;
      }
      out.push_back(std::move(sc));
    }
  }
  return out;
}

}  // namespace chemin
