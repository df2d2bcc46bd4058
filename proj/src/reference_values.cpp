#include "chemin/reference_values.hpp"

#include <sstream>
#include <stdexcept>

namespace chemin {

namespace detail {
extern const std::string_view kReferenceFixture;
}

const ReferenceTriple& ReferenceValues::triple(std::string_view source, int action,
                                               int assumption) const {
  for (const auto& t : triples) {
    if (t.source == source && t.action == action && t.assumption == assumption) return t;
  }
  throw std::out_of_range("no reference triple " + std::string(source) + " " +
                          std::to_string(action) + "," + std::to_string(assumption));
}

const ReferenceScalar& ReferenceValues::scalar(std::string_view name) const {
  for (const auto& s : scalars) {
    if (s.name == name) return s;
  }
  throw std::out_of_range("no reference scalar " + std::string(name));
}

ReferenceValues parse_reference(std::string_view text) {
  ReferenceValues out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string kind;
    if (!(fields >> kind)) continue;
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("reference fixture line " + std::to_string(line_no) + ": " + why);
    };
    std::string extra;
    if (kind == "triple") {
      ReferenceTriple t;
      if (!(fields >> t.source >> t.action >> t.assumption >> t.text[0] >> t.text[1] >> t.text[2])) {
        fail("expected: triple <source> <action> <assumption> <W> <T> <E>");
      }
      if (fields >> extra) fail("trailing field '" + extra + "'");
      for (int i = 0; i < 3; ++i) t.value[i] = Rational::parse(t.text[i]);
      out.triples.push_back(std::move(t));
    } else if (kind == "scalar") {
      ReferenceScalar s;
      if (!(fields >> s.name >> s.text)) fail("expected: scalar <name> <value>");
      if (fields >> extra) fail("trailing field '" + extra + "'");
      s.value = Rational::parse(s.text);
      out.scalars.push_back(std::move(s));
    } else {
      fail("unknown record kind '" + kind + "'");
    }
  }
  return out;
}

const ReferenceValues& published_reference() {
  static const ReferenceValues values = parse_reference(detail::kReferenceFixture);
  return values;
}

}  // namespace chemin
