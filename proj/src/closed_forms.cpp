#include "cliffroot/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace cliffroot {

namespace {

constexpr double kSingular = 1e-12;

struct Frame {
  Signature sig;
  int m = 0;                      // number of generators
  Multivector i_mv;               // g1 g2 g3 when m == 3
  int i_sq = 0;                   // I^2, 0 when there is no central I
  std::vector<Multivector> w_mv;  // g_k, plus g1 g2 when m == 2
  std::vector<Multivector> w_dual; // I g_k when m == 3
  std::vector<int> w_sq;
};

double scalar_part(const Multivector &a) { return a[0]; }

// Coefficient of A along a signed basis blade e.
double coefficient(const Multivector &a, const Multivector &e) {
  return scalar_part(a * e) / scalar_part(e * e);
}

Frame make_frame(Signature sig, const std::vector<Multivector> &gens) {
  Frame f;
  f.sig = sig;
  f.m = static_cast<int>(gens.size());
  for (const auto &g : gens) {
    f.w_mv.push_back(g);
    f.w_sq.push_back(static_cast<int>(scalar_part(g * g)));
  }
  if (f.m == 2) {
    Multivector g12 = gens[0] * gens[1];
    f.w_mv.push_back(g12);
    f.w_sq.push_back(static_cast<int>(scalar_part(g12 * g12)));
  }
  if (f.m == 3) {
    f.i_mv = gens[0] * gens[1] * gens[2];
    f.i_sq = static_cast<int>(scalar_part(f.i_mv * f.i_mv));
    for (const auto &g : gens)
      f.w_dual.push_back(f.i_mv * g);
  }
  return f;
}

struct Parts {
  double z0 = 0, zi = 0;
  std::vector<double> u, v; // w_k = u_k + v_k I
};

std::optional<Parts> decompose(const Multivector &a, const Frame &f) {
  Parts p;
  p.z0 = a[0];
  Multivector rebuilt = Multivector::scalar(f.sig, p.z0);
  if (f.m == 3) {
    p.zi = coefficient(a, f.i_mv);
    rebuilt += p.zi * f.i_mv;
  }
  for (size_t k = 0; k < f.w_mv.size(); ++k) {
    p.u.push_back(coefficient(a, f.w_mv[k]));
    rebuilt += p.u.back() * f.w_mv[k];
    if (f.m == 3) {
      p.v.push_back(coefficient(a, f.w_dual[k]));
      rebuilt += p.v.back() * f.w_dual[k];
    } else {
      p.v.push_back(0.0);
    }
  }
  if (!(rebuilt - a).is_zero())
    return std::nullopt;
  return p;
}

// Values of the central coordinate I under the characters that must be chosen
// independently.
std::vector<cd> characters(const Frame &f) {
  if (f.i_sq == -1)
    return {cd(0, 1)};
  if (f.i_sq == 1)
    return {1.0, -1.0};
  return {0.0};
}

struct CharacterImage {
  cd z;
  std::vector<cd> w;
  cd d; // w^2
};

CharacterImage image(const Parts &p, const Frame &f, cd iota) {
  CharacterImage c;
  c.z = p.z0 + p.zi * iota;
  c.d = 0;
  for (size_t k = 0; k < p.u.size(); ++k) {
    c.w.push_back(p.u[k] + p.v[k] * iota);
    c.d += c.w.back() * c.w.back() * static_cast<double>(f.w_sq[k]);
  }
  return c;
}

struct CharacterRoot {
  cd x;
  std::vector<cd> y; // coefficient of each w basis element
  bool degenerate = false;
  bool representative = false;
};

CharacterRoot character_root(const CharacterImage &c, int s1, int s2) {
  CharacterRoot r;
  r.y.assign(c.w.size(), 0.0);
  double wnorm = 0;
  for (cd w : c.w)
    wnorm = std::max(wnorm, std::abs(w));
  double scale = std::max({1.0, std::abs(c.z), wnorm});
  cd big_d = principal_sqrt(c.d);
  if (std::abs(big_d) > kSingular * scale) {
    cd pp = static_cast<double>(s1) * principal_sqrt(c.z + big_d);
    cd qq = static_cast<double>(s2) * principal_sqrt(c.z - big_d);
    r.x = 0.5 * (pp + qq);
    cd y = (pp - qq) / (2.0 * big_d);
    for (size_t k = 0; k < c.w.size(); ++k)
      r.y[k] = y * c.w[k];
    return r;
  }
  if (wnorm <= kSingular * scale) {
    if (s1 == s2) {
      r.x = static_cast<double>(s1) * principal_sqrt(c.z);
      return r;
    }
    // Central A: the non-central roots form a continuum; take the one along the first
    // w basis element.
    r.x = 0;
    r.representative = true;
    if (!c.w.empty())
      r.y[0] = static_cast<double>(s1) * principal_sqrt(c.z); // w_sq[0] applied by caller
    else
      r.degenerate = true;
    return r;
  }
  // Nilpotent w: x^2 = z, y = 1/(2x).
  if (s1 != s2 || std::abs(c.z) <= kSingular * scale) {
    r.degenerate = true;
    return r;
  }
  r.x = static_cast<double>(s1) * principal_sqrt(c.z);
  for (size_t k = 0; k < c.w.size(); ++k)
    r.y[k] = c.w[k] / (2.0 * r.x);
  return r;
}

struct Lifted {
  Multivector b;
  double max_imag = 0;
};

// Real multivector from its character values.
Lifted lift(const Frame &f, const std::vector<CharacterRoot> &roots) {
  Lifted out;
  out.b = Multivector(f.sig);
  auto add = [&](cd plus, cd minus, const Multivector &unit, const Multivector *dual) {
    if (f.i_sq == -1) {
      out.b += plus.real() * unit;
      out.b += plus.imag() * *dual;
    } else if (f.i_sq == 1) {
      cd a = 0.5 * (plus + minus), b = 0.5 * (plus - minus);
      out.max_imag = std::max({out.max_imag, std::abs(a.imag()), std::abs(b.imag())});
      out.b += a.real() * unit;
      out.b += b.real() * *dual;
    } else {
      out.max_imag = std::max(out.max_imag, std::abs(plus.imag()));
      out.b += plus.real() * unit;
    }
  };
  const CharacterRoot &rp = roots[0];
  const CharacterRoot &rm = roots.size() > 1 ? roots[1] : roots[0];
  Multivector one = Multivector::scalar(f.sig, 1.0);
  add(rp.x, rm.x, one, f.m == 3 ? &f.i_mv : nullptr);
  for (size_t k = 0; k < f.w_mv.size(); ++k)
    add(rp.y[k], rm.y[k], f.w_mv[k], f.m == 3 ? &f.w_dual[k] : nullptr);
  return out;
}

void mark_duplicates(std::vector<RootEntry> &entries) {
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].status != RootStatus::accepted)
      continue;
    for (size_t j = 0; j < i; ++j)
      if (entries[j].status == RootStatus::accepted && mv_approx_eq(entries[i].root, entries[j].root, 1e-9)) {
        entries[i].status = RootStatus::degenerate_skipped;
        break;
      }
  }
}

std::optional<RootReport> solve_in_frame(const Multivector &a, const Frame &f, const SpectralOptions &opt,
                                         const std::string &note) {
  auto parts = decompose(a, f);
  if (!parts)
    return std::nullopt;
  RootReport rep;
  rep.input = a;
  rep.method = "closed-form";
  rep.diagnostics.note = note;

  std::vector<cd> iotas = characters(f);
  std::vector<CharacterImage> images;
  for (cd iota : iotas) {
    images.push_back(image(*parts, f, iota));
    cd d = principal_sqrt(images.back().d);
    rep.diagnostics.eigenvalues.push_back(images.back().z - d);
    rep.diagnostics.eigenvalues.push_back(images.back().z + d);
  }

  double a_scale = std::max(1.0, a.norm_max());
  bool central = false;
  int slots = 2 * static_cast<int>(iotas.size());
  for (int mask = 0; mask < (1 << slots); ++mask) {
    std::vector<int> signs(slots);
    for (int s = 0; s < slots; ++s)
      signs[s] = (mask >> (slots - 1 - s)) & 1 ? -1 : 1;
    std::vector<CharacterRoot> roots;
    bool degenerate = false, representative = false;
    for (size_t c = 0; c < iotas.size(); ++c) {
      roots.push_back(character_root(images[c], signs[2 * c], signs[2 * c + 1]));
      CharacterRoot &r = roots.back();
      degenerate = degenerate || r.degenerate;
      if (r.representative) {
        central = representative = true;
        r.y[0] /= principal_sqrt(static_cast<double>(f.w_sq[0]));
      }
    }
    RootEntry e;
    e.pattern.signs = signs;
    e.label = e.pattern.label();
    e.representative = representative;
    if (degenerate) {
      e.status = RootStatus::degenerate_skipped;
      e.residual = std::numeric_limits<double>::quiet_NaN();
      rep.entries.push_back(std::move(e));
      continue;
    }
    Lifted l = lift(f, roots);
    e.root = l.b;
    e.max_imag = l.max_imag;
    e.residual = (l.b * l.b - a).norm_max();
    if (l.max_imag > opt.imag_tol * std::max(1.0, l.b.norm_max()))
      e.status = RootStatus::rejected_complex;
    else if (e.residual > opt.root_tol * a_scale)
      e.status = RootStatus::rejected_residual;
    else
      e.status = RootStatus::accepted;
    rep.entries.push_back(std::move(e));
  }
  if (central) {
    rep.diagnostics.degenerate = true;
    rep.diagnostics.note += (rep.diagnostics.note.empty() ? "" : "; ");
    rep.diagnostics.note += "central input: mixed-sign roots form a continuum, one representative shown";
  }
  mark_duplicates(rep.entries);
  return rep;
}

Frame frame_for(Signature sig) {
  std::vector<Multivector> gens;
  for (int k = 0; k < sig.n(); ++k)
    gens.push_back(Multivector::basis(sig, Blade{1} << k));
  return make_frame(sig, gens);
}

// Even subalgebra of a 4D algebra, generated by e_k e_4.
Frame even_frame(Signature sig) {
  std::vector<Multivector> gens;
  Multivector e4 = Multivector::basis(sig, Blade{8});
  for (int k = 0; k < 3; ++k)
    gens.push_back(Multivector::basis(sig, Blade{1} << k) * e4);
  return make_frame(sig, gens);
}

std::optional<EinsatzParams> einsatz_in_frame(const Multivector &a, const Frame &f) {
  auto parts = decompose(a, f);
  if (!parts)
    return std::nullopt;
  EinsatzParams ep;
  if (f.i_sq == -1) {
    ep.family = "complex-center";
    auto cp = image(*parts, f, cd(0, 1)), cm = image(*parts, f, cd(0, -1));
    cd dp = principal_sqrt(cp.d), dm = principal_sqrt(cm.d);
    cd qp = principal_sqrt(cp.z - dp), qm = principal_sqrt(cm.z - dm);
    cd pp = principal_sqrt(cp.z + dp), pm = principal_sqrt(cm.z + dm);
    const cd mi(0, -0.5);
    ep.values = {{"Delta+", dp},
                 {"Delta-", dm},
                 {"alpha", 0.5 * (qp + qm)},
                 {"beta", mi * (qp - qm)},
                 {"gamma", 0.5 * (pp + pm)},
                 {"delta", mi * (pp - pm)},
                 {"epsilon", 0.5 * (dm + dp)},
                 {"phi", mi * (dm - dp)}};
  } else if (f.i_sq == 1) {
    ep.family = "split-center";
    auto cp = image(*parts, f, 1.0), cm = image(*parts, f, -1.0);
    cd dp = principal_sqrt(cp.d), dm = principal_sqrt(cm.d);
    cd pp = principal_sqrt(cp.z + dp), qp = principal_sqrt(cp.z - dp);
    cd pm = principal_sqrt(cm.z + dm), qm = principal_sqrt(cm.z - dm);
    const cd i(0, 1);
    ep.values = {{"phi1", dp / i},
                 {"phi2", dm / i},
                 {"alpha", 0.5 * (pp + qp)},
                 {"beta", (pp - qp) / (2.0 * i)},
                 {"gamma", 0.5 * (pm + qm)},
                 {"delta", (pm - qm) / (2.0 * i)}};
  } else {
    ep.family = "no-center";
    auto c = image(*parts, f, 0.0);
    ep.values = {{"m", principal_sqrt(c.d)}};
    if (f.sig == Signature{0, 1})
      ep.values.push_back({"phi", std::atan2(a[1], a[0])});
  }
  return ep;
}

bool only_blades(const Multivector &a, std::initializer_list<Blade> allowed) {
  for (Blade b = 0; b < static_cast<Blade>(a.size()); ++b)
    if (a[b] != 0.0 && std::find(allowed.begin(), allowed.end(), b) == allowed.end())
      return false;
  return true;
}

constexpr Blade E12 = 3, E13 = 5, E23 = 6, E14 = 9, E24 = 10, E34 = 12, E1234 = 15;

} // namespace

std::optional<cd> EinsatzParams::get(const std::string &name) const {
  for (const auto &[k, v] : values)
    if (k == name)
      return v;
  return std::nullopt;
}

std::optional<EinsatzParams> einsatz(const Multivector &a) {
  Signature sig = a.signature();
  if (sig.n() >= 1 && sig.n() <= 3)
    return einsatz_in_frame(a, frame_for(sig));
  if (shape_4d(a) != Shape4d::none)
    return einsatz_in_frame(a, even_frame(sig));
  return std::nullopt;
}

std::optional<RootReport> closed_form_sqrt(const Multivector &a, const SpectralOptions &opt) {
  Signature sig = a.signature();
  if (sig.n() > 3)
    return std::nullopt;
  return solve_in_frame(a, frame_for(sig), opt, "");
}

std::string to_string(Shape4d s) {
  switch (s) {
  case Shape4d::none: return "none";
  case Shape4d::cl40_simple: return "Cl(4,0) simple";
  case Shape4d::cl40_even: return "Cl(4,0) even";
  case Shape4d::cl13_rotor: return "Cl(1,3) rotor";
  case Shape4d::cl13_boost: return "Cl(1,3) boost";
  case Shape4d::cl13_even: return "Cl(1,3) even";
  case Shape4d::cl31_even: return "Cl(3,1) even";
  }
  return "none";
}

Shape4d shape_4d(const Multivector &a) {
  Signature sig = a.signature();
  if (sig.n() != 4 || !only_blades(a, {0, E12, E13, E23, E14, E24, E34, E1234}))
    return Shape4d::none;
  if (sig == Signature{4, 0}) {
    if (only_blades(a, {0, E14, E24, E34, E1234}) || only_blades(a, {0, E12, E13, E23, E1234}))
      return Shape4d::cl40_simple;
    return Shape4d::cl40_even;
  }
  if (sig == Signature{1, 3}) {
    if (only_blades(a, {0, E23, E24, E34, E1234}))
      return Shape4d::cl13_rotor;
    if (only_blades(a, {0, E12, E13, E14, E1234}))
      return Shape4d::cl13_boost;
    return Shape4d::cl13_even;
  }
  if (sig == Signature{3, 1})
    return Shape4d::cl31_even;
  return Shape4d::none;
}

std::optional<RootReport> closed_form_sqrt_4d(const Multivector &a, const SpectralOptions &opt) {
  Shape4d shape = shape_4d(a);
  if (shape == Shape4d::none)
    return std::nullopt;
  return solve_in_frame(a, even_frame(a.signature()), opt, "shape: " + to_string(shape));
}

std::optional<RootReport> closed_form_any(const Multivector &a, const SpectralOptions &opt) {
  if (a.signature().n() <= 3)
    return closed_form_sqrt(a, opt);
  return closed_form_sqrt_4d(a, opt);
}

std::vector<CMatrix> trace_det_sqrt(const CMatrix &m, double zero_tol) {
  if (m.dim() != 2)
    throw AlgebraError("trace_det_sqrt needs a 2x2 matrix");
  cd det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  cd tr = m.trace();
  double scale = std::max(1.0, m.norm_max());
  std::vector<CMatrix> out;
  for (int e1 : {1, -1}) {
    cd sd = static_cast<double>(e1) * principal_sqrt(det);
    cd den2 = tr + 2.0 * sd;
    if (std::abs(den2) <= zero_tol * scale)
      continue;
    cd den = principal_sqrt(den2);
    for (int e2 : {1, -1})
      out.push_back((m + sd * CMatrix::identity(2)) * (static_cast<double>(e2) / den));
  }
  return out;
}

Multivector cl01_sqrt_polar(const Multivector &a, int k) {
  double r = std::hypot(a[0], a[1]);
  double ang = (std::atan2(a[1], a[0]) + 2.0 * std::numbers::pi * k) / 2.0;
  return Multivector(a.signature(), {std::sqrt(r) * std::cos(ang), std::sqrt(r) * std::sin(ang)});
}

Multivector cl01_sqrt_principal(const Multivector &a) {
  double r = std::hypot(a[0], a[1]);
  double b0 = std::sqrt(0.5 * (a[0] + r));
  double b1 = std::sqrt(std::max(0.0, 0.5 * (r - a[0])));
  return Multivector(a.signature(), {b0, std::signbit(a[1]) ? -b1 : b1});
}

double artanh2(double x, double y) { return 0.5 * std::log((x + y) / (x - y)); }

Multivector cl10_sqrt_hyperbolic(const Multivector &a) {
  double rho = std::pow(a[0] * a[0] - a[1] * a[1], 0.25);
  double h = artanh2(a[0], a[1]);
  return Multivector(a.signature(), {rho * std::cosh(h / 2), rho * std::sinh(h / 2)});
}

namespace {
double cl02_magnitude(const Multivector &a) { return std::sqrt(a[1] * a[1] + a[2] * a[2] + a[3] * a[3]); }
Multivector non_scalar(const Multivector &a) {
  Multivector u = a;
  u[0] = 0;
  return u;
}
} // namespace

Multivector cl02_sqrt_polar(const Multivector &a) {
  double mag = cl02_magnitude(a);
  double t = std::atan2(mag, a[0]);
  double rho = std::pow(a[0] * a[0] + mag * mag, 0.25);
  Multivector out = Multivector::scalar(a.signature(), rho * std::cos(t / 2));
  if (mag > 0)
    out += (rho * std::sin(t / 2) / mag) * non_scalar(a);
  return out;
}

Multivector cl02_sqrt_algebraic(const Multivector &a) {
  cd m = principal_sqrt(-(a[1] * a[1] + a[2] * a[2] + a[3] * a[3]));
  cd sp = principal_sqrt(a[0] + m), sm = principal_sqrt(a[0] - m);
  cd scal = 0.5 * (sp + sm);
  cd vec = 0.5 * (sp - sm) / principal_sqrt(m * m);
  return Multivector::scalar(a.signature(), scal.real()) + vec.real() * non_scalar(a);
}

Multivector cl02_sqrt_pure(const Multivector &a) {
  double mag = cl02_magnitude(a);
  return (Multivector::scalar(a.signature(), mag) + non_scalar(a)) / std::sqrt(2 * mag);
}

} // namespace cliffroot
