#include "cliffroot/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace cliffroot {

std::string to_string(RootStatus s) {
  switch (s) {
  case RootStatus::accepted: return "accepted";
  case RootStatus::rejected_complex: return "rejected_complex";
  case RootStatus::rejected_residual: return "rejected_residual";
  case RootStatus::degenerate_skipped: return "degenerate_skipped";
  }
  return "unknown";
}

std::string SignPattern::label() const {
  std::string s = "(";
  for (int v : signs)
    s += v > 0 ? '+' : '-';
  return s + ")";
}

SignPattern SignPattern::negated() const {
  SignPattern r = *this;
  for (int &v : r.signs)
    v = -v;
  return r;
}

std::vector<Multivector> RootReport::accepted() const {
  std::vector<Multivector> out;
  for (const auto &e : entries)
    if (e.status == RootStatus::accepted)
      out.push_back(e.root);
  return out;
}

namespace {

double scale_of(const CMatrix &m) { return std::max(1.0, m.norm_max()); }

// True when v has a component of norm above tol outside the orthonormal basis.
bool independent_of(const std::vector<std::vector<cd>> &basis, const std::vector<cd> &v, double tol) {
  std::vector<cd> w = v;
  for (const auto &u : basis) {
    cd d = 0;
    for (size_t i = 0; i < u.size(); ++i)
      d += std::conj(u[i]) * w[i];
    for (size_t i = 0; i < u.size(); ++i)
      w[i] -= d * u[i];
  }
  double n = 0;
  for (cd x : w)
    n += std::norm(x);
  return std::sqrt(n) > tol;
}

void push_orthonormal(std::vector<std::vector<cd>> &basis, std::vector<cd> w) {
  for (const auto &u : basis) {
    cd d = 0;
    for (size_t i = 0; i < u.size(); ++i)
      d += std::conj(u[i]) * w[i];
    for (size_t i = 0; i < u.size(); ++i)
      w[i] -= d * u[i];
  }
  double n = 0;
  for (cd x : w)
    n += std::norm(x);
  n = std::sqrt(n);
  for (cd &x : w)
    x /= n;
  basis.push_back(std::move(w));
}

std::vector<cd> column(const CMatrix &m, int c) {
  std::vector<cd> v(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    v[i] = m(i, c);
  return v;
}

std::vector<cd> partner(const CMatrix &omega, const std::vector<cd> &v) {
  std::vector<cd> w(v.size());
  for (int i = 0; i < omega.dim(); ++i)
    for (int j = 0; j < omega.dim(); ++j)
      w[i] += omega(i, j) * std::conj(v[j]);
  return w;
}

// Eigenvalues within a hair of the real axis are treated as real.
cd snap_real(cd z, double scale) {
  if (std::abs(z.imag()) <= 1e-12 * std::max(scale, std::abs(z)))
    return {z.real(), 0.0};
  return z;
}

// Doubled classes are block diagonal in two halves. When every column lives in
// one half, columns of the second half go first; relative order is otherwise kept.
void order_by_block(SpectralBasis &sb, int group) {
  const int n = sb.t.dim();
  std::vector<int> block(n);
  for (int c = 0; c < n; ++c) {
    double lo = 0, hi = 0;
    for (int i = 0; i < n; ++i)
      (i < n / 2 ? lo : hi) += std::norm(sb.t(i, c));
    const double total = lo + hi;
    if (lo > (1 - 1e-8) * total)
      block[c] = 0;
    else if (hi > (1 - 1e-8) * total)
      block[c] = 1;
    else
      return;
  }
  std::vector<int> units;
  for (int u = 0; u < n / group; ++u)
    units.push_back(u);
  std::stable_sort(units.begin(), units.end(), [&](int a, int b) { return block[a * group] > block[b * group]; });
  CMatrix t(n);
  std::vector<cd> vals(n);
  int c = 0;
  for (int u : units)
    for (int r = 0; r < group; ++r, ++c) {
      const int src = u * group + r;
      vals[c] = sb.values[src];
      for (int i = 0; i < n; ++i)
        t(i, c) = sb.t(i, src);
    }
  sb.t = t;
  sb.values = vals;
}

} // namespace

SpectralBasis spectral_basis(const MatrixRep &mr, const EigenOptions &opt) {
  SpectralBasis sb;
  const int n = mr.dim();
  const double scale = scale_of(mr.m);
  Eigensystem es;
  try {
    es = eigensystem(mr.m, opt);
  } catch (const ConvergenceError &) {
    return sb;
  }
  sb.degenerate = es.degenerate;
  sb.defective = es.defective;
  if (es.defective)
    return sb;

  if (!mr.quaternion_expanded) {
    sb.values = es.values;
    for (cd &v : sb.values)
      v = snap_real(v, scale);
    sb.t = es.vectors;
  } else {
    // Columns pair as (v, J conj v) with eigenvalues (lambda, conj lambda); the
    // member with negative imaginary part (or either, when real) leads.
    const CMatrix &omega = Representation::get(mr.sig).quaternion_structure();
    const double imag_cut = opt.degeneracy_tol * scale;
    std::vector<std::vector<cd>> cols;
    std::vector<cd> vals;
    std::map<int, std::vector<std::vector<cd>>> spans; // per cluster, orthonormalized
    for (int k = 0; k < n; ++k) {
      cd lam = es.values[k];
      if (lam.imag() > imag_cut)
        continue;
      if (std::abs(lam.imag()) <= imag_cut)
        lam = {lam.real(), 0.0};
      std::vector<cd> v = column(es.vectors, k);
      std::vector<cd> w = partner(omega, v);
      auto &span = spans[es.cluster[k]];
      if (lam.imag() == 0.0) {
        if (!independent_of(span, v, 1e-6))
          continue;
        push_orthonormal(span, v);
        if (!independent_of(span, w, 1e-6))
          return sb;
        push_orthonormal(span, w);
      }
      cols.push_back(v);
      cols.push_back(w);
      vals.push_back(lam);
      vals.push_back(std::conj(lam));
    }
    if (static_cast<int>(cols.size()) != n)
      return sb;
    sb.t = CMatrix(n);
    for (int c = 0; c < n; ++c)
      for (int i = 0; i < n; ++i)
        sb.t(i, c) = cols[c][i];
    sb.values = vals;
  }
  if (mr.bott.blocks() == 2)
    order_by_block(sb, mr.quaternion_expanded ? 2 : 1);
  try {
    sb.t_inv = invert(sb.t, opt.condition_limit);
  } catch (const SingularMatrixError &) {
    sb.condition = condition_number(sb.t);
    return sb;
  }
  sb.condition = sb.t.norm_one() * sb.t_inv.norm_one();
  sb.usable = true;
  return sb;
}

std::vector<SignPattern> allowed_sign_patterns(const Representation &rep) {
  const int m = rep.dim();
  const int step = rep.quaternionic() ? 2 : 1;
  const int free = m / step;
  std::vector<SignPattern> out;
  for (unsigned k = 0; k < (1u << free); ++k) {
    SignPattern p;
    for (int f = 0; f < free; ++f) {
      const int s = (k >> (free - 1 - f)) & 1u ? -1 : 1;
      for (int r = 0; r < step; ++r)
        p.signs.push_back(s);
    }
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

CMatrix apply_diag(const SpectralBasis &sb, const std::vector<cd> &d) {
  CMatrix td = sb.t;
  for (int i = 0; i < td.dim(); ++i)
    for (int j = 0; j < td.dim(); ++j)
      td(i, j) *= d[j];
  return td * sb.t_inv;
}

// Eigenvalues within zero_cut of 0 are exact zeros carrying rounding noise; their
// root is 0, not a tiny imaginary number.
std::vector<cd> signed_roots(const std::vector<cd> &vals, const SignPattern &p, double zero_cut = 0.0) {
  std::vector<cd> d(vals.size());
  for (size_t i = 0; i < vals.size(); ++i)
    d[i] = std::abs(vals[i]) <= zero_cut ? cd(0.0) : static_cast<double>(p.signs[i]) * principal_sqrt(vals[i]);
  return d;
}

struct Evaluated {
  Multivector root;
  double max_imag = 0;
};

Evaluated decompose(const CMatrix &b, Signature sig) {
  MatrixDecomposition d = matrix_to_mv(b, sig);
  return {std::move(d.mv), d.max_imag};
}

RootEntry judge(const Multivector &a, const SignPattern &p, Evaluated ev, const SpectralOptions &opt) {
  RootEntry e{p, p.label(), std::move(ev.root), 0.0, ev.max_imag, RootStatus::accepted};
  e.residual = (e.root * e.root - a).norm_max();
  if (e.max_imag > opt.imag_tol * std::max(1.0, e.root.norm_max()))
    e.status = RootStatus::rejected_complex;
  else if (e.residual > opt.root_tol * std::max(1.0, a.norm_max()))
    e.status = RootStatus::rejected_residual;
  return e;
}

// Base steps of the perturbation ladder, as multiples of perturb_eps. Each base
// step h is sampled at h, h/2, h/4.
constexpr double ladder[] = {1e3, 1e2, 1e1, 1.0};
constexpr double substeps[] = {1.0, 0.5, 0.25};

struct PerturbedBases {
  Perturbation pert;
  std::vector<std::vector<SpectralBasis>> rungs; // rungs[k][j]: step ladder[k] * substeps[j]
};

std::optional<PerturbedBases> find_perturbation(const Multivector &a, const SpectralOptions &opt) {
  const int n = a.signature().n();
  for (Blade b : canonical_order(n)) {
    if (b == 0)
      continue;
    PerturbedBases pb{{b, opt.perturb_eps}, {}};
    bool ok = true;
    for (double l : ladder) {
      std::vector<SpectralBasis> rung;
      for (double f : substeps) {
        Multivector ap = a;
        ap[b] += l * f * opt.perturb_eps;
        SpectralBasis sb = spectral_basis(mv_to_matrix(ap), opt.eigen);
        if (!sb.usable || sb.degenerate) {
          ok = false;
          break;
        }
        rung.push_back(std::move(sb));
      }
      if (!ok)
        break;
      pb.rungs.push_back(std::move(rung));
    }
    if (ok)
      return pb;
  }
  return std::nullopt;
}

// Limit eps -> 0 of g(A + eps e_b). Each rung gives a second-order Richardson
// value; the adjacent pair of rungs that agree best supplies the result, which
// is rejected when even that pair differs by more than 10 root_tol.
std::optional<CMatrix> perturbed_limit(const PerturbedBases &pb, const std::function<CMatrix(const SpectralBasis &)> &g,
                                       double tol) {
  std::vector<CMatrix> s;
  for (const auto &rung : pb.rungs) {
    const CMatrix g0 = g(rung[0]), g1 = g(rung[1]), g2 = g(rung[2]);
    const CMatrix r1 = 2.0 * g1 - g0, r2 = 2.0 * g2 - g1;
    s.push_back((1.0 / 3.0) * (4.0 * r2 - r1));
  }
  size_t best = 0;
  double best_gap = std::numeric_limits<double>::infinity();
  for (size_t k = 0; k + 1 < s.size(); ++k) {
    const double gap = (s[k] - s[k + 1]).norm_max();
    if (gap < best_gap) {
      best_gap = gap;
      best = k;
    }
  }
  if (!(best_gap <= 10.0 * tol * scale_of(s[best])))
    return std::nullopt;
  return s[best];
}

bool vanishing_spectrum(const std::vector<cd> &vals, double scale) {
  return std::all_of(vals.begin(), vals.end(), [&](cd v) { return std::abs(v) <= 1e-7 * scale; });
}

void mark_duplicates(std::vector<RootEntry> &entries, double tol) {
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].status != RootStatus::accepted)
      continue;
    for (size_t j = 0; j < i; ++j)
      if (entries[j].status == RootStatus::accepted && mv_approx_eq(entries[i].root, entries[j].root, tol)) {
        entries[i].status = RootStatus::degenerate_skipped;
        break;
      }
  }
}

} // namespace

RootReport spectral_sqrt(const Multivector &a, const SpectralOptions &opt) {
  const Signature sig = a.signature();
  const Representation &rep = Representation::get(sig);
  RootReport report{a, "spectral", {}, {}};
  const MatrixRep mr = mv_to_matrix(a);
  const double scale = scale_of(mr.m);
  const double tol = opt.root_tol * std::max(1.0, a.norm_max());

  const Multivector one = Multivector::scalar(sig, 1.0);
  if (!a.is_zero() && !mv_approx_eq(a, one, 1e-12) && mv_approx_eq(a * a, a, 1e-12)) {
    report.method = "idempotent";
    report.diagnostics.note = "idempotent input: roots are +A and -A";
    SignPattern plus{{1}}, minus{{-1}};
    report.entries.push_back({plus, "idempotent(+)", a, (a * a - a).norm_max(), 0.0, RootStatus::accepted});
    report.entries.push_back({minus, "idempotent(-)", -a, (a * a - a).norm_max(), 0.0, RootStatus::accepted});
    return report;
  }

  SpectralBasis sb = spectral_basis(mr, opt.eigen);
  auto &diag = report.diagnostics;
  diag.degenerate = sb.degenerate;
  diag.defective = sb.defective;
  diag.t_condition = sb.condition;
  if (!sb.values.empty())
    diag.eigenvalues = sb.values;
  else {
    try {
      diag.eigenvalues = eigenvalues(mr.m, opt.eigen);
    } catch (const ConvergenceError &) {
    }
  }

  if (!diag.eigenvalues.empty() && vanishing_spectrum(diag.eigenvalues, scale)) {
    diag.note = "all eigenvalues vanish: no spectral roots";
    return report;
  }

  const std::vector<SignPattern> patterns = allowed_sign_patterns(rep);
  const size_t half = patterns.size() / 2;
  report.entries.resize(patterns.size());

  if (sb.usable) {
    for (size_t k = 0; k < half; ++k) {
      const CMatrix b = apply_diag(sb, signed_roots(sb.values, patterns[k], 1e-12 * scale));
      Evaluated ev = decompose(b, sig);
      RootEntry e = judge(a, patterns[k], ev, opt);
      RootEntry neg = e;
      neg.pattern = patterns[patterns.size() - 1 - k];
      neg.label = neg.pattern.label();
      neg.root = -e.root;
      report.entries[k] = std::move(e);
      report.entries[patterns.size() - 1 - k] = std::move(neg);
    }
  } else {
    auto pb = find_perturbation(a, opt);
    if (!pb) {
      diag.note = "spectral basis singular and no perturbation resolves it";
      for (size_t k = 0; k < patterns.size(); ++k)
        report.entries[k] = {patterns[k], patterns[k].label(), Multivector(sig), 0.0, 0.0,
                             RootStatus::degenerate_skipped};
      return report;
    }
    report.method = "spectral-perturbed";
    diag.perturbation = pb->pert;
    diag.eigenvalues = pb->rungs.back()[0].values;
    diag.t_condition = pb->rungs.back()[0].condition;
    diag.note = "eigenbasis singular; limit of A + eps*" + blade_name(pb->pert.blade) + " as eps -> 0";
    for (size_t k = 0; k < half; ++k) {
      auto lim = perturbed_limit(
          *pb, [&](const SpectralBasis &b) { return apply_diag(b, signed_roots(b.values, patterns[k])); }, opt.root_tol);
      RootEntry e;
      if (!lim) {
        e = {patterns[k], patterns[k].label(), Multivector(sig), 0.0, 0.0, RootStatus::degenerate_skipped};
        e.residual = std::nan("");
      } else {
        e = judge(a, patterns[k], decompose(*lim, sig), opt);
      }
      RootEntry neg = e;
      neg.pattern = patterns[patterns.size() - 1 - k];
      neg.label = neg.pattern.label();
      neg.root = -e.root;
      report.entries[k] = std::move(e);
      report.entries[patterns.size() - 1 - k] = std::move(neg);
    }
  }
  mark_duplicates(report.entries, tol);
  return report;
}

RootReport sqrt_minus_one(Signature sig, const SpectralOptions &opt) {
  return spectral_sqrt(Multivector::scalar(sig, -1.0), opt);
}

Multivector mv_function(const Multivector &a, const std::function<cd(cd)> &f, const SpectralOptions &opt) {
  const Signature sig = a.signature();
  const MatrixRep mr = mv_to_matrix(a);
  SpectralBasis sb = spectral_basis(mr, opt.eigen);
  CMatrix b;
  auto eval = [&](const SpectralBasis &s) {
    std::vector<cd> d(s.values.size());
    for (size_t i = 0; i < d.size(); ++i)
      d[i] = f(s.values[i]);
    return apply_diag(s, d);
  };
  if (sb.usable) {
    b = eval(sb);
  } else {
    auto pb = find_perturbation(a, opt);
    if (!pb)
      throw AlgebraError("function of multivector: eigenbasis singular under every perturbation");
    auto lim = perturbed_limit(*pb, eval, opt.root_tol);
    if (!lim)
      throw AlgebraError("function of multivector: perturbed values do not converge");
    b = *lim;
  }
  MatrixDecomposition d = matrix_to_mv(b, sig);
  if (d.max_imag > opt.imag_tol * std::max(1.0, d.mv.norm_max()))
    throw AlgebraError("function of multivector: result is not real");
  return d.mv;
}

Multivector mv_exp(const Multivector &a, const SpectralOptions &opt) {
  return mv_function(a, [](cd z) { return std::exp(z); }, opt);
}

bool same_root_set(const std::vector<Multivector> &x, const std::vector<Multivector> &y, double tol) {
  if (x.size() != y.size())
    return false;
  std::vector<bool> used(y.size(), false);
  for (const auto &r : x) {
    bool found = false;
    for (size_t j = 0; j < y.size() && !found; ++j)
      if (!used[j] && mv_approx_eq(r, y[j], tol))
        used[j] = found = true;
    if (!found)
      return false;
  }
  return true;
}

} // namespace cliffroot
