#include "cliffroot/equations.hpp"

#include <algorithm>

#include "cliffroot/eigen.hpp"
#include "cliffroot/rep.hpp"

namespace cliffroot {

Multivector mv_inverse(const Multivector &a, double condition_limit) {
  MatrixRep m = mv_to_matrix(a);
  return matrix_to_mv(invert(m.m, condition_limit), a.signature()).mv;
}

bool is_central(const Multivector &a, double tol) {
  Signature sig = a.signature();
  double bound = tol * std::max(1.0, a.norm_max());
  for (Blade b = 1; b < static_cast<Blade>(sig.size()); ++b) {
    Multivector e = Multivector::basis(sig, b);
    if ((a * e - e * a).norm_max() > bound)
      return false;
  }
  return true;
}

namespace {

void add_solution(SolutionReport &rep, Solution s, double scale, double verify_tol) {
  s.verified = s.residual <= verify_tol * scale;
  (s.verified ? rep.solutions : rep.rejected).push_back(std::move(s));
}

bool already_listed(const SolutionReport &rep, const Multivector &x) {
  return std::any_of(rep.solutions.begin(), rep.solutions.end(),
                     [&](const Solution &s) { return mv_approx_eq(s.x, x, 1e-9); });
}

} // namespace

SolutionReport solve_quadratic(const Multivector &a, const Multivector &b, const SpectralOptions &opt,
                               double verify_tol) {
  if (!(a.signature() == b.signature()))
    throw AlgebraError("solve_quadratic: operands from different algebras");
  SolutionReport rep;
  rep.equation = "X^2 + A X + X A + B = 0";
  rep.radicand = a * a - b;
  rep.roots = spectral_sqrt(rep.radicand, opt);
  double scale = std::max({1.0, a.norm_max(), b.norm_max()});
  for (const auto &e : rep.roots.entries) {
    if (e.status != RootStatus::accepted)
      continue;
    Solution s;
    s.label = e.label;
    s.root = e.root;
    s.x = e.root - a;
    s.residual = (s.x * s.x + a * s.x + s.x * a + b).norm_max();
    add_solution(rep, std::move(s), std::max(scale, e.root.norm_max() * e.root.norm_max()), verify_tol);
  }
  return rep;
}

SolutionReport solve_riccati(const RiccatiProblem &prob, const SpectralOptions &opt, double verify_tol) {
  const Multivector &a = prob.a, &b = prob.b, &c = prob.c;
  if (!(a.signature() == b.signature() && a.signature() == c.signature()))
    throw AlgebraError("solve_riccati: operands from different algebras");
  if (!is_central(c))
    throw AlgebraError("solve_riccati: C is not in the center of " + c.signature().name());
  Multivector a_inv = mv_inverse(a);
  SolutionReport rep;
  rep.equation = "X A X + C X + X C = B";
  rep.radicand = b * a + c * c;
  rep.roots = spectral_sqrt(rep.radicand, opt);
  std::vector<int> signs;
  if (prob.sign != RiccatiProblem::Sign::minus)
    signs.push_back(1);
  if (prob.sign != RiccatiProblem::Sign::plus)
    signs.push_back(-1);
  for (int sign : signs) {
    for (const auto &e : rep.roots.entries) {
      if (e.status != RootStatus::accepted)
        continue;
      Solution s;
      s.label = (sign > 0 ? "+" : "-") + e.label;
      s.root = sign * e.root;
      s.x = (s.root - c) * a_inv;
      if (already_listed(rep, s.x))
        continue;
      s.residual = (s.x * a * s.x + c * s.x + s.x * c - b).norm_max();
      double scale = std::max({1.0, b.norm_max(), s.x.norm_max() * s.x.norm_max() * a.norm_max()});
      add_solution(rep, std::move(s), scale, verify_tol);
    }
  }
  return rep;
}

} // namespace cliffroot
