#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "chemin/rational.hpp"

namespace chemin {

/// One published (W, T, E) triple, keyed by source and (action, assumption).
struct ReferenceTriple {
  std::string source;
  int action = 0;
  int assumption = 0;
  std::array<std::string, 3> text;  // as printed
  std::array<Rational, 3> value;    // parsed exactly
};

struct ReferenceScalar {
  std::string name;
  std::string text;
  Rational value;
};

/// Published constants loaded from the fixture file.
struct ReferenceValues {
  std::vector<ReferenceTriple> triples;
  std::vector<ReferenceScalar> scalars;

  /// Throws std::out_of_range if absent.
  const ReferenceTriple& triple(std::string_view source, int action, int assumption) const;
  const ReferenceScalar& scalar(std::string_view name) const;
};

/// Parses the fixture format:
///   triple <source> <action> <assumption> <W> <T> <E>
///   scalar <name> <value>
/// '#' starts a comment. Throws std::invalid_argument on malformed lines.
ReferenceValues parse_reference(std::string_view text);

/// The fixture shipped in data/reference_values.txt, compiled in.
const ReferenceValues& published_reference();

}  // namespace chemin
