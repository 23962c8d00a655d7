#include "cliffroot/rep.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace cliffroot {

namespace {


// Solves the normal equations for x ~ sum c_l basis_l; returns false if x is not in the span.
bool decompose(const Multivector &x, const std::vector<Multivector> &basis, std::vector<double> &c) {
  const int k = static_cast<int>(basis.size());
  std::vector<std::vector<double>> g(k, std::vector<double>(k + 1, 0.0));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b)
      for (int i = 0; i < x.size(); ++i)
        g[a][b] += basis[a].coeffs()[i] * basis[b].coeffs()[i];
    for (int i = 0; i < x.size(); ++i)
      g[a][k] += basis[a].coeffs()[i] * x.coeffs()[i];
  }
  for (int col = 0; col < k; ++col) {
    int piv = col;
    for (int r = col + 1; r < k; ++r)
      if (std::abs(g[r][col]) > std::abs(g[piv][col]))
        piv = r;
    std::swap(g[col], g[piv]);
    if (std::abs(g[col][col]) < 1e-12)
      return false;
    for (int r = 0; r < k; ++r) {
      if (r == col)
        continue;
      const double f = g[r][col] / g[col][col];
      for (int j = col; j <= k; ++j)
        g[r][j] -= f * g[col][j];
    }
  }
  c.assign(k, 0.0);
  for (int a = 0; a < k; ++a)
    c[a] = g[a][k] / g[a][a];
  Multivector back(x.signature());
  for (int a = 0; a < k; ++a)
    back += c[a] * basis[a];
  return mv_approx_eq(back, x, 1e-12);
}

int real_rank(const std::vector<Multivector> &vs) {
  if (vs.empty())
    return 0;
  const int cols = vs[0].size();
  std::vector<std::vector<double>> a;
  for (const auto &v : vs)
    a.push_back(v.coeffs());
  int rank = 0;
  for (int col = 0; col < cols && rank < static_cast<int>(a.size()); ++col) {
    int piv = rank;
    for (int r = rank + 1; r < static_cast<int>(a.size()); ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col]))
        piv = r;
    if (std::abs(a[piv][col]) < 1e-12)
      continue;
    std::swap(a[rank], a[piv]);
    for (int r = rank + 1; r < static_cast<int>(a.size()); ++r) {
      const double f = a[r][col] / a[rank][col];
      for (int j = col; j < cols; ++j)
        a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

int ring_size(BottKind k) {
  switch (k) {
  case BottKind::R:
  case BottKind::R2: return 1;
  case BottKind::C: return 2;
  default: return 4;
  }
}

} // namespace

std::string to_string(const SymbolicMatrix &m, bool quaternionic) {
  static const char *complex_units[] = {"", "i", "j", "k"};
  static const char *quaternion_units[] = {"", "q1", "q2", "q3"};
  std::string out;
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j) {
      const UnitEntry e = m.at(i, j);
      const int parts[] = {e.w, e.x, e.y, e.z};
      for (int u = 0; u < 4; ++u) {
        if (parts[u] == 0)
          continue;
        out += out.empty() ? (parts[u] < 0 ? "-" : "") : (parts[u] < 0 ? " - " : " + ");
        if (std::abs(parts[u]) != 1)
          out += std::to_string(std::abs(parts[u]));
        out += (quaternionic ? quaternion_units : complex_units)[u];
        out += "E" + std::to_string(i + 1) + std::to_string(j + 1);
      }
    }
  return out.empty() ? "0" : out;
}

Multivector primitive_idempotent(Signature sig) {
  Multivector p = Multivector::scalar(sig, 1.0);
  for (Blade g : ideal_data(sig).idempotent_factors)
    p = p * (Multivector::scalar(sig, 0.5) + Multivector::basis(sig, g, 0.5));
  return p;
}

std::vector<SymbolicMatrix> generate_reps_from_idempotent(Signature sig) {
  sig = Signature::make(sig.p, sig.q);
  const IdealData &data = ideal_data(sig);
  const BottClass bott = bott_class(sig);
  const Multivector p = primitive_idempotent(sig);
  if (!mv_approx_eq(p * p, p, 1e-14))
    throw AlgebraError("idempotent factors of " + sig.name() + " do not give an idempotent");

  // The division ring P Cl P must be R, C or H.
  std::vector<Multivector> ring_span;
  for (Blade b = 0; b < static_cast<Blade>(sig.size()); ++b)
    ring_span.push_back(p * Multivector::basis(sig, b) * p);
  const int ring_dim = real_rank(ring_span);
  if (ring_dim != 1 && ring_dim != 2 && ring_dim != 4)
    throw AlgebraError("division ring of " + sig.name() + " has dimension " + std::to_string(ring_dim));
  if (ring_dim != ring_size(bott.kind) || static_cast<int>(data.division_ring.size()) < std::min(ring_dim, 3))
    throw AlgebraError("division ring of " + sig.name() + " does not match its Bott class");

  // Units 1, u1, u2 and u3 = u1 u2, so Hamilton's relations hold by construction.
  std::vector<Multivector> units;
  for (int u = 0; u < std::min(ring_dim, 3); ++u)
    units.push_back(p * Multivector::basis(sig, data.division_ring[u]) * p);
  if (ring_dim == 4)
    units.push_back(units[1] * units[2]);
  for (size_t u = 1; u < units.size(); ++u)
    if (!mv_approx_eq(units[u] * units[u], -p, 1e-14))
      throw AlgebraError("division ring unit does not square to -1 in " + sig.name());
  std::vector<Multivector> hatted_units;
  for (const auto &u : units)
    hatted_units.push_back(grade_involution(u));

  std::vector<Multivector> ideal;
  std::vector<bool> hatted;
  for (Blade b : data.ideal_basis) {
    ideal.push_back(Multivector::basis(sig, b) * p);
    hatted.push_back(false);
  }
  if (data.doubled)
    for (Blade b : data.ideal_basis) {
      ideal.push_back(grade_involution(Multivector::basis(sig, b) * p));
      hatted.push_back(true);
    }
  const int dim = static_cast<int>(ideal.size());
  std::vector<Multivector> spanning;
  for (int j = 0; j < dim; ++j)
    for (const auto &u : hatted[j] ? hatted_units : units)
      spanning.push_back(ideal[j] * u);
  if (real_rank(spanning) != dim * ring_dim)
    throw AlgebraError("ideal basis of " + sig.name() + " is not linearly independent");

  std::vector<Multivector> dual;
  for (const auto &s : ideal)
    dual.push_back(reverse(reciprocal(s)));

  std::vector<SymbolicMatrix> out;
  for (int k = 0; k < sig.n(); ++k) {
    const Multivector ek = Multivector::basis(sig, 1u << k);
    SymbolicMatrix m{dim, std::vector<UnitEntry>(static_cast<size_t>(dim) * dim)};
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        const Multivector x = dual[i] * ek * ideal[j];
        if (x.norm_max() < 1e-14)
          continue;
        std::vector<double> c;
        if (hatted[i] != hatted[j] || !decompose(x, hatted[i] ? hatted_units : units, c))
          throw AlgebraError("matrix entry outside the division ring in " + sig.name());
        int parts[4] = {0, 0, 0, 0};
        for (size_t u = 0; u < c.size(); ++u) {
          parts[u] = static_cast<int>(std::lround(c[u]));
          if (std::abs(c[u] - parts[u]) > 1e-12)
            throw AlgebraError("non-integer matrix entry in " + sig.name());
        }
        m.entries[static_cast<size_t>(i) * dim + j] = UnitEntry{parts[0], parts[1], parts[2], parts[3]};
      }
    out.push_back(std::move(m));
  }
  return out;
}

MatrixRep expand_quaternions(const SymbolicMatrix &s, Signature sig) {
  const BottClass bott = bott_class(sig);
  if (!bott.quaternionic())
    throw AlgebraError("expand_quaternions called on a non-quaternionic representation of " + sig.name());
  MatrixRep r{sig, bott, CMatrix(2 * s.dim), true, {}};
  const cd i(0, 1);
  for (int a = 0; a < s.dim; ++a)
    for (int b = 0; b < s.dim; ++b) {
      const UnitEntry e = s.at(a, b);
      r.m(2 * a, 2 * b) = double(e.w) + i * double(e.x);
      r.m(2 * a, 2 * b + 1) = double(e.y) + i * double(e.z);
      r.m(2 * a + 1, 2 * b) = -double(e.y) + i * double(e.z);
      r.m(2 * a + 1, 2 * b + 1) = double(e.w) - i * double(e.x);
    }
  for (int k = 0; k < s.dim; ++k)
    r.block_structure.push_back({2 * k, 2 * k + 1});
  return r;
}

MatrixRep to_matrix_rep(const SymbolicMatrix &s, Signature sig) {
  const BottClass bott = bott_class(sig);
  if (bott.quaternionic())
    return expand_quaternions(s, sig);
  MatrixRep r{sig, bott, CMatrix(s.dim), false, {}};
  for (int a = 0; a < s.dim; ++a)
    for (int b = 0; b < s.dim; ++b) {
      const UnitEntry e = s.at(a, b);
      if (e.y != 0 || e.z != 0 || (bott.kind != BottKind::C && e.x != 0))
        throw AlgebraError("table entry outside the division ring of " + sig.name());
      r.m(a, b) = cd(e.w, e.x);
    }
  for (int k = 0; k < s.dim; ++k)
    r.block_structure.push_back({k});
  return r;
}

Representation::Representation(Signature sig) : sig_(sig), bott_(bott_class(sig)) {
  for (const SymbolicMatrix &s : basis_rep_table(sig)) {
    MatrixRep r = to_matrix_rep(s, sig);
    if (blocks_.empty())
      blocks_ = r.block_structure;
    gens_.push_back(std::move(r.m));
  }
  dim_ = gens_.front().dim();
  blades_.resize(sig.size());
  for (Blade b = 0; b < static_cast<Blade>(sig.size()); ++b) {
    CMatrix m = CMatrix::identity(dim_);
    for (int k = 0; k < sig.n(); ++k)
      if (b >> k & 1)
        m = m * gens_[k];
    blades_[b] = std::move(m);
  }
  omega_ = CMatrix(dim_);
  if (quaternionic())
    for (int k = 0; k < dim_; k += 2) {
      omega_(k, k + 1) = 1.0;
      omega_(k + 1, k) = -1.0;
    }
}

const Representation &Representation::get(Signature sig) {
  static const std::vector<std::unique_ptr<Representation>> all = [] {
    std::vector<std::unique_ptr<Representation>> v(49);
    for (const Signature &s : all_signatures())
      v[s.p * 7 + s.q].reset(new Representation(s));
    return v;
  }();
  sig = Signature::make(sig.p, sig.q);
  return *all[sig.p * 7 + sig.q];
}

MatrixRep mv_to_matrix(const Multivector &a) {
  const Representation &rep = Representation::get(a.signature());
  CMatrix m(rep.dim());
  for (Blade b = 0; b < static_cast<Blade>(a.size()); ++b) {
    const double c = a[b];
    if (c == 0.0)
      continue;
    const CMatrix &e = rep.blade_matrix(b);
    for (int i = 0; i < m.dim(); ++i)
      for (int j = 0; j < m.dim(); ++j)
        if (e(i, j) != 0.0)
          m(i, j) += c * e(i, j);
  }
  return MatrixRep{a.signature(), rep.bott(), std::move(m), rep.quaternionic(), rep.block_structure()};
}

namespace {

// Tr(M e_J^{-1}) / m with e_J^{-1} = (e_J^2) e_J.
cd blade_coordinate(const CMatrix &m, const CMatrix &e, int square) {
  cd t = 0;
  const int n = m.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (e(j, i) != 0.0)
        t += m(i, j) * e(j, i);
  return t * double(square) / double(n);
}

} // namespace

MatrixDecomposition matrix_to_mv(const CMatrix &m, Signature sig) {
  const Representation &rep = Representation::get(sig);
  if (m.dim() != rep.dim())
    throw AlgebraError("matrix dimension " + std::to_string(m.dim()) + " does not match " + sig.name());
  MatrixDecomposition d{Multivector(sig), std::vector<cd>(sig.size()), 0.0};
  for (Blade b = 0; b < static_cast<Blade>(sig.size()); ++b)
    d.mv[b] = blade_coordinate(m, rep.blade_matrix(b), blade_square(b, sig)).real();
  const CMatrix r = m - mv_to_matrix(d.mv).m;
  for (Blade b = 0; b < static_cast<Blade>(sig.size()); ++b)
    d.residual[b] = blade_coordinate(r, rep.blade_matrix(b), blade_square(b, sig));
  d.max_imag = r.norm_max();
  return d;
}

} // namespace cliffroot
