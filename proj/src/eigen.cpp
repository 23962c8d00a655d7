#include "cliffroot/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace cliffroot {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void reduce_to_hessenberg(CMatrix &h) {
  const int n = h.dim();
  for (int k = 0; k + 2 < n; ++k) {
    double xnorm = 0;
    for (int i = k + 1; i < n; ++i)
      xnorm += std::norm(h(i, k));
    xnorm = std::sqrt(xnorm);
    if (xnorm == 0.0)
      continue;
    const cd x0 = h(k + 1, k);
    const cd phase = std::abs(x0) == 0.0 ? cd(1.0) : x0 / std::abs(x0);
    std::vector<cd> v(n, 0.0);
    for (int i = k + 1; i < n; ++i)
      v[i] = h(i, k);
    v[k + 1] += phase * xnorm;
    double vnorm = 0;
    for (int i = k + 1; i < n; ++i)
      vnorm += std::norm(v[i]);
    vnorm = std::sqrt(vnorm);
    for (int i = k + 1; i < n; ++i)
      v[i] /= vnorm;
    // H <- (I - 2vv*) H (I - 2vv*)
    for (int j = 0; j < n; ++j) {
      cd s = 0;
      for (int i = k + 1; i < n; ++i)
        s += std::conj(v[i]) * h(i, j);
      for (int i = k + 1; i < n; ++i)
        h(i, j) -= 2.0 * v[i] * s;
    }
    for (int i = 0; i < n; ++i) {
      cd s = 0;
      for (int j = k + 1; j < n; ++j)
        s += h(i, j) * v[j];
      for (int j = k + 1; j < n; ++j)
        h(i, j) -= 2.0 * s * std::conj(v[j]);
    }
  }
}

struct Rotation {
  double c;
  cd s;
};

Rotation make_rotation(cd a, cd b) {
  const double r = std::hypot(std::abs(a), std::abs(b));
  if (r == 0.0)
    return {1.0, 0.0};
  if (std::abs(a) == 0.0)
    return {0.0, std::conj(b) / r};
  return {std::abs(a) / r, (a / std::abs(a)) * std::conj(b) / r};
}

cd wilkinson_shift(cd a, cd b, cd c, cd d) {
  const cd half = 0.5 * (a - d);
  const cd disc = std::sqrt(half * half + b * c);
  const cd mu1 = 0.5 * (a + d) + disc;
  const cd mu2 = 0.5 * (a + d) - disc;
  return std::abs(mu1 - d) < std::abs(mu2 - d) ? mu1 : mu2;
}

// Shifted QR on an upper Hessenberg matrix; the diagonal converges to the eigenvalues.
std::vector<cd> hessenberg_qr(CMatrix h, int max_sweeps) {
  const int n = h.dim();
  int hi = n - 1;
  int iter = 0;
  int total = 0;
  while (hi > 0) {
    int l = hi;
    while (l > 0) {
      const double off = std::abs(h(l, l - 1));
      double diag = std::abs(h(l, l)) + std::abs(h(l - 1, l - 1));
      if (diag == 0.0)
        diag = h.norm_max();
      if (off <= kEps * diag) {
        h(l, l - 1) = 0.0;
        break;
      }
      --l;
    }
    if (l == hi) {
      --hi;
      iter = 0;
      continue;
    }
    if (++total > max_sweeps * n)
      throw ConvergenceError("QR iteration did not converge");
    cd mu;
    if (iter > 0 && iter % 11 == 0)
      mu = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1));
    else
      mu = wilkinson_shift(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
    ++iter;
    for (int k = l; k <= hi; ++k)
      h(k, k) -= mu;
    std::vector<Rotation> rots;
    for (int k = l; k < hi; ++k) {
      const Rotation g = make_rotation(h(k, k), h(k + 1, k));
      rots.push_back(g);
      for (int j = k; j <= hi; ++j) {
        const cd x = h(k, j), y = h(k + 1, j);
        h(k, j) = g.c * x + g.s * y;
        h(k + 1, j) = -std::conj(g.s) * x + g.c * y;
      }
    }
    for (int k = l; k < hi; ++k) {
      const Rotation &g = rots[k - l];
      for (int i = l; i <= std::min(k + 2, hi); ++i) {
        const cd x = h(i, k), y = h(i, k + 1);
        h(i, k) = g.c * x + std::conj(g.s) * y;
        h(i, k + 1) = -g.s * x + g.c * y;
      }
    }
    for (int k = l; k <= hi; ++k)
      h(k, k) += mu;
  }
  std::vector<cd> vals(n);
  for (int i = 0; i < n; ++i)
    vals[i] = h(i, i);
  return vals;
}

struct LU {
  CMatrix a;
  std::vector<int> perm;
  bool singular = false;
};

LU lu_decompose(const CMatrix &m, double floor_pivot) {
  LU f{m, std::vector<int>(m.dim()), false};
  const int n = m.dim();
  std::iota(f.perm.begin(), f.perm.end(), 0);
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(f.a(i, k)) > std::abs(f.a(piv, k)))
        piv = i;
    if (piv != k) {
      for (int j = 0; j < n; ++j)
        std::swap(f.a(k, j), f.a(piv, j));
      std::swap(f.perm[k], f.perm[piv]);
    }
    if (std::abs(f.a(k, k)) <= floor_pivot) {
      f.singular = true;
      if (floor_pivot == 0.0)
        return f;
      f.a(k, k) = floor_pivot;
    }
    for (int i = k + 1; i < n; ++i) {
      const cd factor = f.a(i, k) / f.a(k, k);
      f.a(i, k) = factor;
      for (int j = k + 1; j < n; ++j)
        f.a(i, j) -= factor * f.a(k, j);
    }
  }
  return f;
}

std::vector<cd> lu_solve(const LU &f, const std::vector<cd> &b) {
  const int n = f.a.dim();
  std::vector<cd> x(n);
  for (int i = 0; i < n; ++i)
    x[i] = b[f.perm[i]];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      x[i] -= f.a(i, j) * x[j];
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j)
      x[i] -= f.a(i, j) * x[j];
    x[i] /= f.a(i, i);
  }
  return x;
}

CMatrix lu_inverse(const LU &f) {
  const int n = f.a.dim();
  CMatrix inv(n);
  for (int j = 0; j < n; ++j) {
    std::vector<cd> e(n, 0.0);
    e[j] = 1.0;
    const auto x = lu_solve(f, e);
    for (int i = 0; i < n; ++i)
      inv(i, j) = x[i];
  }
  return inv;
}

std::vector<cd> inverse_iteration(const CMatrix &m, cd lambda, double scale) {
  const int n = m.dim();
  CMatrix shifted = m;
  for (int i = 0; i < n; ++i)
    shifted(i, i) -= lambda;
  const LU f = lu_decompose(shifted, kEps * scale);
  std::vector<cd> x(n);
  for (int i = 0; i < n; ++i)
    x[i] = cd(1.0 + 0.1 * i, 0.01 * i * i);
  for (int it = 0; it < 3; ++it) {
    x = lu_solve(f, x);
    double norm = 0;
    for (const cd &v : x)
      norm += std::norm(v);
    norm = std::sqrt(norm);
    for (cd &v : x)
      v /= norm;
  }
  return x;
}

// Null space of m - mu*I from its reduced row echelon form, free columns last to first.
std::vector<std::vector<cd>> null_space(const CMatrix &m, cd mu, double tol) {
  const int n = m.dim();
  CMatrix a = m;
  for (int i = 0; i < n; ++i)
    a(i, i) -= mu;
  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot(n, false);
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int piv = row;
    for (int i = row + 1; i < n; ++i)
      if (std::abs(a(i, col)) > std::abs(a(piv, col)))
        piv = i;
    if (std::abs(a(piv, col)) <= tol)
      continue;
    for (int j = 0; j < n; ++j)
      std::swap(a(row, j), a(piv, j));
    const cd p = a(row, col);
    for (int j = 0; j < n; ++j)
      a(row, j) /= p;
    for (int i = 0; i < n; ++i) {
      if (i == row || a(i, col) == 0.0)
        continue;
      const cd factor = a(i, col);
      for (int j = 0; j < n; ++j)
        a(i, j) -= factor * a(row, j);
    }
    pivot_col_of_row.push_back(col);
    is_pivot[col] = true;
    ++row;
  }
  std::vector<std::vector<cd>> basis;
  for (int f = n - 1; f >= 0; --f) {
    if (is_pivot[f])
      continue;
    std::vector<cd> x(n, 0.0);
    x[f] = 1.0;
    for (int r = 0; r < static_cast<int>(pivot_col_of_row.size()); ++r)
      x[pivot_col_of_row[r]] = -a(r, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

bool before(cd a, cd b, double tol) {
  if (std::abs(a.real() - b.real()) > tol)
    return a.real() < b.real();
  return a.imag() < b.imag();
}

} // namespace

void normalize_column(CMatrix &v, int col) {
  const int n = v.dim();
  double norm = 0;
  for (int i = 0; i < n; ++i)
    norm += std::norm(v(i, col));
  norm = std::sqrt(norm);
  if (norm == 0.0)
    return;
  cd phase = 1.0;
  for (int i = 0; i < n; ++i)
    if (std::abs(v(i, col)) > 1e-12 * norm) {
      phase = std::abs(v(i, col)) / v(i, col);
      break;
    }
  for (int i = 0; i < n; ++i)
    v(i, col) *= phase / norm;
  for (int i = 0; i < n; ++i)
    if (std::abs(v(i, col)) > 1e-12) {
      v(i, col) = std::abs(v(i, col));
      break;
    }
}

std::vector<cd> eigenvalues(const CMatrix &m, const EigenOptions &opt) {
  CMatrix h = m;
  reduce_to_hessenberg(h);
  std::vector<cd> vals = hessenberg_qr(h, opt.max_sweeps);
  const double tol = opt.degeneracy_tol * std::max(1.0, m.norm_max());
  std::stable_sort(vals.begin(), vals.end(), [&](cd a, cd b) { return before(a, b, tol); });
  return vals;
}

double condition_number(const CMatrix &m) {
  const LU f = lu_decompose(m, 0.0);
  if (f.singular)
    return std::numeric_limits<double>::infinity();
  return m.norm_one() * lu_inverse(f).norm_one();
}

CMatrix invert(const CMatrix &m, double condition_limit) {
  const LU f = lu_decompose(m, 0.0);
  if (f.singular)
    throw SingularMatrixError("matrix is singular");
  CMatrix inv = lu_inverse(f);
  const double cond = m.norm_one() * inv.norm_one();
  if (!(cond <= condition_limit))
    throw SingularMatrixError("matrix is singular to working precision (condition " + std::to_string(cond) + ")");
  return inv;
}

Eigensystem eigensystem(const CMatrix &m, const EigenOptions &opt) {
  const int n = m.dim();
  const double scale = m.norm_max() > 0 ? m.norm_max() : 1.0;
  const double tol = opt.degeneracy_tol * scale;
  std::vector<cd> raw = eigenvalues(m, opt);

  // Group coinciding eigenvalues (transitively).
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i)
      i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(raw[i] - raw[j]) <= tol)
        parent[find(i)] = find(j);
  std::vector<std::vector<int>> groups;
  std::vector<int> group_of(n, -1);
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    if (group_of[r] < 0) {
      group_of[r] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[group_of[r]].push_back(i);
  }
  std::vector<cd> mean(groups.size());
  for (size_t g = 0; g < groups.size(); ++g) {
    for (int i : groups[g])
      mean[g] += raw[i];
    mean[g] /= static_cast<double>(groups[g].size());
    std::sort(groups[g].begin(), groups[g].end(), [&](int a, int b) { return before(raw[a], raw[b], tol); });
  }
  std::vector<int> order(groups.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return before(mean[a], mean[b], tol); });

  Eigensystem es;
  es.vectors = CMatrix(n);
  int col = 0;
  for (size_t gi = 0; gi < order.size(); ++gi) {
    const auto &members = groups[order[gi]];
    const int k = static_cast<int>(members.size());
    if (k == 1) {
      const cd lambda = raw[members[0]];
      const auto x = inverse_iteration(m, lambda, scale);
      for (int i = 0; i < n; ++i)
        es.vectors(i, col) = x[i];
      es.values.push_back(lambda);
      es.cluster.push_back(static_cast<int>(gi));
      normalize_column(es.vectors, col++);
      continue;
    }
    es.degenerate = true;
    const cd mu = mean[order[gi]];
    auto basis = null_space(m, mu, opt.rank_tol * scale);
    if (static_cast<int>(basis.size()) < k)
      es.defective = true;
    for (int c = 0; c < k; ++c) {
      const auto &x = basis.empty() ? std::vector<cd>(n, 0.0) : basis[std::min<size_t>(c, basis.size() - 1)];
      for (int i = 0; i < n; ++i)
        es.vectors(i, col) = x[i];
      es.values.push_back(mu);
      es.cluster.push_back(static_cast<int>(gi));
      normalize_column(es.vectors, col++);
    }
  }
  es.condition = es.defective ? std::numeric_limits<double>::infinity() : condition_number(es.vectors);
  es.singular = es.defective || !(es.condition <= opt.condition_limit);
  return es;
}

} // namespace cliffroot
