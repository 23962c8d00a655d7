#include <doctest.h>

#include "cliffroot/parser.hpp"
#include "cliffroot/rep.hpp"
#include "generators.hpp"

using namespace cliffroot;
using cliffroot::testing::MvGen;

namespace {

CMatrix dense(std::initializer_list<std::initializer_list<cd>> rows) {
  CMatrix m(static_cast<int>(rows.size()));
  int i = 0;
  for (const auto &r : rows) {
    int j = 0;
    for (cd v : r)
      m(i, j++) = v;
    ++i;
  }
  return m;
}

const cd I1(0, 1);

} // namespace

TEST_CASE("idempotent construction reproduces every tabulated generator set") {
  for (const Signature &sig : all_signatures()) {
    CAPTURE(sig.name());
    CHECK(generate_reps_from_idempotent(sig) == basis_rep_table(sig));
  }
}

TEST_CASE("tabulated generators satisfy the Clifford relations exactly") {
  for (const Signature &sig : all_signatures()) {
    CAPTURE(sig.name());
    const Representation &rep = Representation::get(sig);
    const auto &g = rep.generators();
    int m = rep.dim();
    CHECK(m == rep.bott().complex_dim());
    for (int i = 0; i < sig.n(); ++i) {
      cd s = i < sig.p ? 1.0 : -1.0;
      CHECK((g[i] * g[i] - CMatrix::identity(m) * s).norm_max() == 0.0);
      for (int j = i + 1; j < sig.n(); ++j)
        CHECK((g[i] * g[j] + g[j] * g[i]).norm_max() == 0.0);
    }
  }
}

TEST_CASE("explicit generator matrices") {
  // Cl(4,1)
  const Representation &r41 = Representation::get(Signature::make(4, 1));
  CHECK((r41.generators()[3] - dense({{0, 0, -I1, 0}, {0, 0, 0, I1}, {I1, 0, 0, 0}, {0, -I1, 0, 0}})).norm_max() == 0);
  CHECK((r41.generators()[4] - dense({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}})).norm_max() == 0);
  // Cl(2,1)
  const Representation &r21 = Representation::get(Signature::make(2, 1));
  CHECK((r21.generators()[2] - dense({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}})).norm_max() == 0);
  // Cl(3,0) image of -1 + e3 - e12 + e123/2
  Signature s30 = Signature::make(3, 0);
  CMatrix a = mv_to_matrix(parse_mv("-1 + e3 - e12 + 1/2 e123", s30)).m;
  CHECK((a - dense({{-1.0 + 0.5 * I1, -1.0 - I1}, {1.0 + I1, -1.0 + 0.5 * I1}})).norm_max() == 0);
}

TEST_CASE("Cl(2,2) representation from the idempotent (1+e1)(1+e23)/4") {
  Signature sig = Signature::make(2, 2);
  const auto &g = Representation::get(sig).generators();
  CHECK((g[0] - dense({{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}})).norm_max() == 0);
  CHECK((g[1] - dense({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}})).norm_max() == 0);
  CHECK((g[2] - dense({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}})).norm_max() == 0);
  CHECK((g[3] - dense({{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}})).norm_max() == 0);
  Multivector p = primitive_idempotent(sig);
  CHECK(mv_approx_eq(p * p, p, 1e-15));
  CHECK(mv_approx_eq(p, parse_mv("1/4 + 1/4 e1 + 1/4 e23 + 1/4 e123", sig), 1e-15));
}

TEST_CASE("representation is a homomorphism with an exact inverse (property)") {
  MvGen gen(31);
  for (const Signature &sig : all_signatures()) {
    CAPTURE(sig.name());
    for (int t = 0; t < 10; ++t) {
      Multivector a = gen.dense(sig), b = gen.dense(sig);
      CHECK((mv_to_matrix(a * b).m - mv_to_matrix(a).m * mv_to_matrix(b).m).norm_max() <= 1e-10);
      MatrixDecomposition d = matrix_to_mv(mv_to_matrix(a).m, sig);
      CHECK((d.mv - a).norm_max() <= 1e-12);
      CHECK(d.max_imag <= 1e-12);
    }
  }
}

TEST_CASE("quaternionic images commute with the structure map (property)") {
  MvGen gen(32);
  for (const Signature &sig : all_signatures()) {
    const Representation &rep = Representation::get(sig);
    if (!rep.quaternionic())
      continue;
    CAPTURE(sig.name());
    const CMatrix &omega = rep.quaternion_structure();
    for (int t = 0; t < 5; ++t) {
      CMatrix m = mv_to_matrix(gen.dense(sig)).m;
      CHECK((m * omega - omega * m.conj()).norm_max() <= 1e-12);
    }
  }
}

TEST_CASE("non-real matrices report the discarded part") {
  Signature sig = Signature::make(2, 0);
  CMatrix m = CMatrix::identity(2) * I1;
  MatrixDecomposition d = matrix_to_mv(m, sig);
  CHECK(d.mv.is_zero());
  CHECK(d.max_imag == doctest::Approx(1.0));
}
