#include "chemin/reference_values.hpp"

#include <stdexcept>

#include <gtest/gtest.h>

namespace chemin {
namespace {

TEST(ReferenceValues, ParsesTriplesScalarsAndComments) {
  const ReferenceValues v = parse_reference(
      "# comment\n"
      "\n"
      "triple demo 1 0  1/4 0.5 -1/4   # trailing\n"
      "scalar half 2/4\n");
  ASSERT_EQ(v.triples.size(), 1u);
  const ReferenceTriple& t = v.triple("demo", 1, 0);
  EXPECT_EQ(t.text[1], "0.5");
  EXPECT_EQ(t.value[0], Rational(1, 4));
  EXPECT_EQ(t.value[1], Rational(1, 2));
  EXPECT_EQ(t.value[2], Rational(-1, 4));
  EXPECT_EQ(v.scalar("half").value, Rational(1, 2));
  EXPECT_EQ(v.scalar("half").text, "2/4");
}

TEST(ReferenceValues, MissingEntriesThrow) {
  const ReferenceValues v = parse_reference("scalar a 1\n");
  EXPECT_THROW(v.scalar("b"), std::out_of_range);
  EXPECT_THROW(v.triple("exact", 0, 0), std::out_of_range);
}

TEST(ReferenceValues, MalformedLinesThrow) {
  for (const char* bad : {"triple x 0 0 1 2\n", "scalar\n", "scalar a 1/0\n", "quad a 1\n",
                          "triple x 0 0 a b c\n", "scalar a 1 2\n"}) {
    EXPECT_THROW(parse_reference(bad), std::invalid_argument) << bad;
  }
}

TEST(ReferenceValues, ShippedFixture) {
  const ReferenceValues& v = published_reference();
  for (const char* source : {"exact", "decimal", "badoureau", "bertrand"}) {
    for (int u = 0; u < 2; ++u)
      for (int w = 0; w < 2; ++w) EXPECT_NO_THROW(v.triple(source, u, w)) << source;
  }
  EXPECT_EQ(v.triple("exact", 1, 1).value[2], Rational(175, 23153));
  EXPECT_EQ(v.triple("bertrand", 1, 1).text[0], "0.444348");
  EXPECT_EQ(v.triple("coup", 0, 0).value[0], Rational(2152648, 4826809));
  EXPECT_EQ(v.scalar("near_tie_stand").text, "-299/1157");
  EXPECT_EQ(v.scalar("naive_draw_badoureau").value, Rational(351, 23153));
}

}  // namespace
}  // namespace chemin
