#include <doctest.h>

#include "cliffroot/parser.hpp"
#include "generators.hpp"

using namespace cliffroot;
using cliffroot::testing::MvGen;

TEST_CASE("parse multivector notation") {
  Signature sig = Signature::make(3, 0);
  Multivector a = parse_mv("-1 + e3 - e12 + 1/2 e123", sig);
  CHECK(a[0] == -1);
  CHECK(a[4] == 1);
  CHECK(a[3] == -1);
  CHECK(a[7] == 0.5);
  CHECK(parse_mv("2*e1 - 3e23", sig)[1] == 2);
  CHECK(parse_mv("2*e1 - 3e23", sig)[6] == -3);
  CHECK(parse_mv("e1 + e1", sig)[1] == 2);
  CHECK(parse_mv("−1 + 1.5e-3*e2", sig)[0] == -1);
  CHECK(parse_mv("−1 + 1.5e-3*e2", sig)[2] == doctest::Approx(1.5e-3));
  CHECK(parse_mv("0", sig).is_zero());
}

TEST_CASE("malformed input reports a position") {
  Signature sig = Signature::make(3, 0);
  CHECK_THROWS_AS(parse_mv("", sig), ParseError);
  CHECK_THROWS_AS(parse_mv("e4", sig), ParseError);
  CHECK_THROWS_AS(parse_mv("e21", sig), ParseError);
  CHECK_THROWS_AS(parse_mv("1/0 e1", sig), ParseError);
  CHECK_THROWS_AS(parse_mv("2 3", sig), ParseError);
  try {
    parse_mv("1 + e5", sig);
    FAIL("expected ParseError");
  } catch (const ParseError &e) {
    CHECK(e.position() >= 4);
  }
}

TEST_CASE("format omits zeros and keeps canonical order") {
  Signature sig = Signature::make(3, 0);
  CHECK(format_mv(parse_mv("e123 + 2 - e3 + e12", sig)) == "2 - e3 + e12 + e123");
  CHECK(format_mv(Multivector(sig)) == "0");
}

TEST_CASE("format and parse round-trip exactly (property)") {
  MvGen gen(21);
  for (int t = 0; t < 300; ++t) {
    Signature sig = gen.signature();
    Multivector a = gen.dense(sig, 1e3);
    if (t % 3 == 0)
      a = gen.sparse_integer(sig);
    CHECK(mv_approx_eq(parse_mv(format_mv(a), sig), a, 0));
  }
}
