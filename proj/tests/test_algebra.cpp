#include <doctest.h>

#include "cliffroot/algebra.hpp"
#include "generators.hpp"

using namespace cliffroot;
using cliffroot::testing::MvGen;

TEST_CASE("blade products follow the signature") {
  Signature s30 = Signature::make(3, 0), s03 = Signature::make(0, 3);
  CHECK(blade_product(1, 2, s30).blade == 3);
  CHECK(blade_product(1, 2, s30).sign == 1);
  CHECK(blade_product(2, 1, s30).sign == -1);
  CHECK(blade_square(3, s30) == -1);
  CHECK(blade_square(7, s30) == -1);
  CHECK(blade_square(7, s03) == 1);
  CHECK(blade_square(1, s03) == -1);
  CHECK(blade_square(7, Signature::make(2, 1)) == 1);
  CHECK(blade_square(7, Signature::make(1, 2)) == -1);
}

TEST_CASE("blade names and canonical order") {
  CHECK(blade_name(0) == "1");
  CHECK(blade_name(5) == "e13");
  CHECK(blade_name(31) == "e12345");
  const auto &order = canonical_order(3);
  REQUIRE(order.size() == 8);
  CHECK(order[0] == 0);
  CHECK(order[3] == 4);
  CHECK(order[4] == 3);
  CHECK(order[7] == 7);
}

TEST_CASE("Bott classes of the tabulated algebras") {
  struct Row {
    int p, q;
    const char *name;
    long roots;
  } rows[] = {{1, 0, "2R(1)", 4}, {0, 1, "C(1)", 2},  {2, 0, "R(2)", 4},  {0, 2, "H(1)", 2},
              {3, 0, "C(2)", 4},  {2, 1, "2R(2)", 16}, {1, 2, "C(2)", 4},  {0, 3, "2H(1)", 4},
              {4, 0, "H(2)", 4},  {1, 3, "H(2)", 4},  {3, 1, "R(4)", 16}, {2, 2, "R(4)", 16},
              {4, 1, "C(4)", 16}, {0, 6, "R(8)", 256}};
  for (const auto &r : rows) {
    CAPTURE(r.p);
    CAPTURE(r.q);
    BottClass b = bott_class(Signature::make(r.p, r.q));
    CHECK(b.name() == r.name);
    CHECK(b.max_roots() == r.roots);
  }
  CHECK(all_signatures().size() == 27);
}

TEST_CASE("unsupported signatures are rejected") {
  CHECK_THROWS_AS(Signature::make(7, 0), AlgebraError);
  CHECK_THROWS_AS(Signature::make(0, 0), AlgebraError);
  CHECK_THROWS_AS(Signature::make(-1, 2), AlgebraError);
}

TEST_CASE("geometric product is associative and distributive (property)") {
  MvGen gen(11);
  for (int t = 0; t < 200; ++t) {
    Signature sig = gen.signature();
    Multivector a = gen.dense(sig), b = gen.dense(sig), c = gen.dense(sig);
    CHECK(mv_approx_eq((a * b) * c, a * (b * c), 1e-12));
    CHECK(mv_approx_eq(a * (b + c), a * b + a * c, 1e-12));
  }
}

TEST_CASE("involutions are anti/automorphisms (property)") {
  MvGen gen(12);
  for (int t = 0; t < 100; ++t) {
    Signature sig = gen.signature();
    Multivector a = gen.dense(sig), b = gen.dense(sig);
    CHECK(mv_approx_eq(reverse(a * b), reverse(b) * reverse(a), 1e-12));
    CHECK(mv_approx_eq(grade_involution(a * b), grade_involution(a) * grade_involution(b), 1e-12));
    Multivector sum(sig);
    for (int k = 0; k <= sig.n(); ++k)
      sum += grade_select(a, k);
    CHECK(mv_approx_eq(sum, a, 0));
    CHECK(mv_approx_eq(reverse(reverse(a)), a, 0));
  }
}

TEST_CASE("reciprocal basis inverts each blade") {
  Signature sig = Signature::make(1, 3);
  for (Blade b = 0; b < static_cast<Blade>(sig.size()); ++b) {
    Multivector e = Multivector::basis(sig, b);
    CHECK(mv_approx_eq(e * reciprocal(reverse(e)), Multivector::scalar(sig, 1.0), 0));
  }
}

TEST_CASE("mixing algebras throws") {
  Multivector a = Multivector::scalar(Signature::make(3, 0), 1.0);
  Multivector b = Multivector::scalar(Signature::make(2, 1), 1.0);
  CHECK_THROWS_AS(a * b, AlgebraError);
  CHECK_THROWS_AS(a + b, AlgebraError);
}
