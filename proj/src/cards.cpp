#include "chemin/cards.hpp"

#include <stdexcept>
#include <string>

namespace chemin {

namespace {

void check_value(int v, const char* what) {
  if (v < 0 || v >= kCardValues) {
    throw std::out_of_range(std::string(what) + " out of range: " + std::to_string(v));
  }
}

}  // namespace

int rank_value(int rank) {
  if (rank < 0 || rank >= kRanks) throw std::out_of_range("rank out of range: " + std::to_string(rank));
  return rank < 9 ? rank + 1 : 0;
}

int mod10(int sum) {
  if (sum < 0) throw std::out_of_range("mod10 of negative value");
  return sum % 10;
}

Rational third_card_pdf(int value) {
  check_value(value, "card value");
  return Rational(value == 0 ? 4 : 1, kRanks);
}

Rational two_card_pdf(int total) {
  check_value(total, "hand total");
  return Rational(total == 0 ? 25 : 16, kRanks * kRanks);
}

const CardModel& CardModel::standard() {
  static const CardModel model = [] {
    CardModel m;
    for (int v = 0; v < kCardValues; ++v) {
      m.card[v] = third_card_pdf(v);
      m.two_card[v] = two_card_pdf(v);
    }
    return m;
  }();
  return model;
}

CardModel CardModel::convolved() {
  CardModel m;
  for (int v = 0; v < kCardValues; ++v) m.card[v] = third_card_pdf(v);
  for (int a = 0; a < kCardValues; ++a) {
    for (int b = 0; b < kCardValues; ++b) m.two_card[mod10(a + b)] += m.card[a] * m.card[b];
  }
  return m;
}

int sgn(int x) { return (x > 0) - (x < 0); }

int apply(OutcomeFunctional f, int difference) {
  switch (f) {
    case OutcomeFunctional::kWin:
      return difference > 0 ? 1 : 0;
    case OutcomeFunctional::kTie:
      return difference == 0 ? 1 : 0;
    case OutcomeFunctional::kSign:
      return sgn(difference);
  }
  throw std::invalid_argument("unknown outcome functional");
}

}  // namespace chemin
