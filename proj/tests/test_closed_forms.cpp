#include <doctest.h>

#include <cmath>

#include "cliffroot/closed_forms.hpp"
#include "cliffroot/parser.hpp"
#include "cliffroot/rep.hpp"
#include "generators.hpp"

using namespace cliffroot;
using cliffroot::testing::MvGen;

namespace {

Multivector mv(const std::string &text, int p, int q) { return parse_mv(text, Signature::make(p, q)); }

bool contains(const std::vector<Multivector> &roots, const Multivector &x, double tol = 1e-10) {
  for (const auto &r : roots)
    if (mv_approx_eq(r, x, tol))
      return true;
  return false;
}

std::vector<Multivector> closed_roots(const Multivector &a) {
  auto rep = closed_form_any(a);
  REQUIRE(rep.has_value());
  return rep->accepted();
}

bool real_or_imaginary(cd z, double tol = 1e-10) { return std::abs(z.real()) <= tol || std::abs(z.imag()) <= tol; }

} // namespace

TEST_CASE("hyperbolic numbers: four roots when a0 > |a1|") {
  auto roots = closed_roots(mv("3 + e1", 1, 0));
  CHECK(roots.size() == 4);
  double x = std::sqrt(2.0), y = std::sqrt(4.0); // sqrt(a0 - a1), sqrt(a0 + a1)
  Signature s10 = Signature::make(1, 0);
  CHECK(contains(roots, Multivector(s10, {0.5 * (x + y), -0.5 * (x - y)})));
  CHECK(contains(roots, Multivector(s10, {0.5 * (x - y), -0.5 * (x + y)})));
  CHECK(closed_roots(mv("1 + 3e1", 1, 0)).empty());
}

TEST_CASE("Cl(1,1): 2e2 - 1 keeps only one pair") {
  auto rep = closed_form_sqrt(mv("-1 + 2e2", 1, 1));
  REQUIRE(rep);
  auto roots = rep->accepted();
  REQUIRE(roots.size() == 2);
  double s5 = std::sqrt(5.0);
  Multivector b = mv("0", 1, 1);
  b[0] = std::sqrt((s5 - 1) / 2);
  b[2] = std::sqrt(2 / (s5 - 1));
  CHECK(contains(roots, b));
  CHECK(contains(roots, -b));
  int complex = 0;
  for (const auto &e : rep->entries)
    complex += e.status == RootStatus::rejected_complex;
  CHECK(complex == 2);
}

TEST_CASE("Cl(1,2): e1 - 2e23") {
  auto roots = closed_roots(mv("e1 - 2e23", 1, 2));
  REQUIRE(roots.size() == 4);
  double c1 = std::sqrt(-2 + std::sqrt(5.0)), c2 = std::sqrt(2 + std::sqrt(5.0));
  Signature sig = Signature::make(1, 2);
  Multivector b12 = 0.5 * (c2 * mv("-e1 + e123", 1, 2) - c1 * mv("1 + e23", 1, 2));
  Multivector b34 = 0.5 * (-c1 * mv("e1 + e123", 1, 2) + c2 * mv("-1 + e23", 1, 2));
  CHECK(contains(roots, b12));
  CHECK(contains(roots, -b12));
  CHECK(contains(roots, b34));
  CHECK(contains(roots, -b34));
  (void)sig;
}

TEST_CASE("Cl(0,3): scalar plus pseudoscalar") {
  for (auto [a0, a123] : {std::pair{3.0, 1.0}, std::pair{2.0, -1.5}}) {
    Signature sig = Signature::make(0, 3);
    Multivector a = Multivector::scalar(sig, a0) + Multivector::basis(sig, 7, a123);
    auto roots = closed_roots(a);
    CHECK(roots.size() == 4);
    double sp = std::sqrt(a0 + a123), sm = std::sqrt(a0 - a123);
    CHECK(contains(roots, 0.5 * (Multivector::scalar(sig, sp + sm) + Multivector::basis(sig, 7, sp - sm))));
    CHECK(contains(roots, -0.5 * (Multivector::scalar(sig, sp - sm) + Multivector::basis(sig, 7, sp + sm))));
  }
  // one character is -1 on a quaternion block: a continuum of roots, representatives only
  Multivector central = mv("1 + 2e123", 0, 3);
  auto reps = closed_roots(central);
  CHECK(reps.size() == 4);
  for (const auto &b : reps)
    CHECK(mv_approx_eq(b * b, central, 1e-12));
  CHECK(spectral_sqrt(central).accepted().empty());
}

TEST_CASE("Cl(2,1): existence of all sixteen roots follows a0 > |(a1, a13)|") {
  MvGen gen(61);
  for (int t = 0; t < 200; ++t) {
    double a0 = gen.uniform(-3, 3), a1 = gen.uniform(-2, 2), a13 = gen.uniform(-2, 2);
    double r = std::hypot(a1, a13);
    if (std::abs(a0 - r) < 1e-6)
      continue;
    Signature sig = Signature::make(2, 1);
    Multivector a = Multivector::scalar(sig, a0) + Multivector::basis(sig, 1, a1) + Multivector::basis(sig, 5, a13);
    CAPTURE(format_mv(a));
    CHECK(closed_roots(a).size() == (a0 > r ? 16u : 0u));
  }
}

TEST_CASE("Cl(2,1): realness certificates inside the sixteen-root domain") {
  Multivector a = mv("2 + e1 + e13", 2, 1);
  auto ep = einsatz(a);
  REQUIRE(ep);
  CHECK(ep->family == "split-center");
  double c1 = std::sqrt(2 + std::sqrt(2.0)), c2 = std::sqrt(2 - std::sqrt(2.0));
  for (const char *name : {"alpha", "gamma"}) {
    CHECK(std::abs(ep->get(name)->imag()) <= 1e-10);
    CHECK(ep->get(name)->real() == doctest::Approx(0.5 * (c1 + c2)));
  }
  for (const char *name : {"beta", "delta"}) {
    CHECK(std::abs(ep->get(name)->real()) <= 1e-10);
    CHECK(std::abs(ep->get(name)->imag()) == doctest::Approx(0.5 * (c1 - c2)));
  }
  for (const char *name : {"phi1", "phi2"}) {
    cd phi = *ep->get(name);
    CHECK(std::abs(phi.real()) <= 1e-10);
    CHECK(std::abs(phi.imag()) == doctest::Approx(std::sqrt(2.0)));
  }
  CHECK(std::abs((*ep->get("phi1") * *ep->get("phi2")).imag()) <= 1e-10);
}

TEST_CASE("Cl(3,0): einsatz parameters are real or purely imaginary (property)") {
  MvGen gen(62);
  for (int t = 0; t < 100; ++t) {
    Multivector a = gen.dense(Signature::make(3, 0));
    auto ep = einsatz(a);
    REQUIRE(ep);
    CHECK(ep->family == "complex-center");
    for (const auto &[name, value] : ep->values) {
      if (name == "Delta+" || name == "Delta-")
        continue;
      CAPTURE(name);
      CHECK(real_or_imaginary(value));
    }
    CHECK(std::abs(*ep->get("Delta-") - std::conj(*ep->get("Delta+"))) <= 1e-12);
  }
}

TEST_CASE("trigonometric and algebraic forms agree") {
  MvGen gen(63);
  Signature s01 = Signature::make(0, 1), s02 = Signature::make(0, 2), s10 = Signature::make(1, 0);
  for (int t = 0; t < 100; ++t) {
    Multivector a = gen.dense(s01);
    CHECK(mv_approx_eq(cl01_sqrt_polar(a, 0), cl01_sqrt_principal(a), 1e-13));
    CHECK(mv_approx_eq(cl01_sqrt_polar(a, 1), -cl01_sqrt_principal(a), 1e-13));
    Multivector q = gen.dense(s02);
    if (std::abs(q[0]) > 1e-3)
      CHECK(mv_approx_eq(cl02_sqrt_polar(q), cl02_sqrt_algebraic(q), 1e-12));
    q[0] = 0;
    CHECK(mv_approx_eq(cl02_sqrt_polar(q), cl02_sqrt_pure(q), 1e-12));
    CHECK(mv_approx_eq(cl02_sqrt_pure(q) * cl02_sqrt_pure(q), q, 1e-12));
    Multivector h = gen.dense(s10);
    h[0] = std::abs(h[1]) + gen.uniform(0.1, 2);
    Multivector r = cl10_sqrt_hyperbolic(h);
    CHECK(mv_approx_eq(r * r, h, 1e-12));
    CHECK(contains(closed_roots(h), r, 1e-12));
  }
  CHECK(artanh2(2, 1) == doctest::Approx(0.5 * std::log(3.0)));
  Multivector e1 = Multivector::basis(s01, 1);
  CHECK(mv_approx_eq(cl01_sqrt_polar(e1), (Multivector::scalar(s01, 1) + e1) / std::sqrt(2.0), 1e-15));
}

TEST_CASE("4D shapes") {
  CHECK(shape_4d(mv("1 + e14 + 2e24 - e34 + e1234", 4, 0)) == Shape4d::cl40_simple);
  CHECK(shape_4d(mv("1 + e12 + e13 + e23 + e1234", 4, 0)) == Shape4d::cl40_simple);
  CHECK(shape_4d(mv("1 + e12 + e34", 4, 0)) == Shape4d::cl40_even);
  CHECK(shape_4d(mv("1 + e23 + e24 + e34 + e1234", 1, 3)) == Shape4d::cl13_rotor);
  CHECK(shape_4d(mv("1 + e12 + e13 + e14 + e1234", 1, 3)) == Shape4d::cl13_boost);
  CHECK(shape_4d(mv("1 + e12 + e23", 1, 3)) == Shape4d::cl13_even);
  CHECK(shape_4d(mv("1 + e12", 3, 1)) == Shape4d::cl31_even);
  CHECK(shape_4d(mv("1 + e1", 3, 1)) == Shape4d::none);
  CHECK(shape_4d(mv("1 + e12", 2, 2)) == Shape4d::none);
  CHECK_FALSE(closed_form_sqrt_4d(mv("1 + e1", 4, 0)).has_value());
  CHECK_FALSE(closed_form_sqrt(mv("1 + e1", 4, 0)).has_value());
}

TEST_CASE("Cl(1,3) rotor halves the angle") {
  for (double th : {0.3, 1.0, 2.5}) {
    Signature sig = Signature::make(1, 3);
    Multivector a = Multivector::scalar(sig, std::cos(th)) + Multivector::basis(sig, 6, std::sin(th));
    auto roots = closed_roots(a);
    Multivector half = Multivector::scalar(sig, std::cos(th / 2)) + Multivector::basis(sig, 6, std::sin(th / 2));
    CHECK(contains(roots, half));
    CHECK(contains(roots, -half));
  }
}

TEST_CASE("Cl(3,1): scalar plus pseudoscalar") {
  double eta = 1.3, xi = -0.7;
  Signature sig = Signature::make(3, 1);
  Multivector a = Multivector::scalar(sig, eta) + Multivector::basis(sig, 15, xi);
  auto rep = closed_form_sqrt_4d(a);
  REQUIRE(rep);
  cd sp = std::sqrt(cd(eta, xi)), sm = std::sqrt(cd(eta, -xi));
  const cd i(0, 1);
  Multivector b12 = Multivector::scalar(sig, (0.5 * (sp + sm)).real()) +
                    Multivector::basis(sig, 15, (-0.5 * i * (sp - sm)).real());
  auto roots = rep->accepted();
  CHECK(contains(roots, b12));
  CHECK(contains(roots, -b12));
  CHECK(rep->diagnostics.degenerate);
  // The mixed-sign roots form a continuum; one member lies in the e13, e24 plane.
  Multivector b34 = Multivector::basis(sig, 5, (0.5 * i * (sm - sp)).real()) +
                    Multivector::basis(sig, 10, (0.5 * i * i * (sm + sp)).real());
  CHECK(mv_approx_eq(b34 * b34, a, 1e-12));
  for (const auto &e : rep->entries)
    if (e.status == RootStatus::accepted && e.representative) {
      CHECK(std::abs(e.root[0]) <= 1e-12);
      CHECK(mv_approx_eq(e.root * e.root, a, 1e-12));
    }
}

TEST_CASE("2x2 trace-determinant square root") {
  CMatrix id = CMatrix::identity(2);
  auto ids = trace_det_sqrt(id);
  CHECK(ids.size() == 2); // the e1 = -1 branch has a vanishing denominator
  for (const auto &r : ids)
    CHECK((r * r - id).norm_max() <= 1e-14);
  CHECK(trace_det_sqrt(mv_to_matrix(mv("e1 + e12", 3, 0)).m).empty());
  MvGen gen(64);
  for (int t = 0; t < 50; ++t) {
    CMatrix m = mv_to_matrix(gen.dense(Signature::make(1, 2))).m;
    auto roots = trace_det_sqrt(m);
    CHECK(roots.size() == 4);
    for (const auto &r : roots)
      CHECK((r * r - m).norm_max() <= 1e-10 * std::max(1.0, m.norm_max()));
  }
}

TEST_CASE("closed forms agree with the spectral method (property)") {
  MvGen gen(65);
  for (const Signature &sig : all_signatures()) {
    if (sig.n() > 3)
      continue;
    CAPTURE(sig.name());
    for (int t = 0; t < 25; ++t) {
      Multivector a = t % 2 ? gen.dense(sig) : gen.shifted(sig);
      auto cf = closed_form_sqrt(a);
      REQUIRE(cf);
      CHECK(same_root_set(cf->accepted(), spectral_sqrt(a).accepted(), 1e-8));
    }
  }
  for (auto [p, q] : {std::pair{4, 0}, std::pair{1, 3}, std::pair{3, 1}}) {
    Signature sig = Signature::make(p, q);
    for (int t = 0; t < 25; ++t) {
      Multivector a = gen.even(sig);
      auto cf = closed_form_sqrt_4d(a);
      REQUIRE(cf);
      CHECK(same_root_set(cf->accepted(), spectral_sqrt(a).accepted(), 1e-8));
    }
  }
}
