#pragma once
#include <optional>
#include <string>
#include <vector>

#include "cliffroot/algebra.hpp"
#include "cliffroot/cmatrix.hpp"
#include "cliffroot/spectral.hpp"

namespace cliffroot {

// Closed-form roots. A is written as z + sum_k w_k g_k with z, w_k in the span of
// {1, I}, I = g_1 g_2 g_3 central (three generators) or absent (fewer). Under each
// character of that span the root is x + y w with
//   x = (P + Q)/2, y = (P - Q)/(2D), P = s1 sqrt(z + D), Q = s2 sqrt(z - D), D^2 = w^2,
// and the root is lifted back from the character values. For I^2 = -1 the two
// characters are complex conjugates, so only one is free.

struct EinsatzParams {
  std::string family; // "complex-center", "split-center", "no-center"
  std::vector<std::pair<std::string, cd>> values;

  std::optional<cd> get(const std::string &name) const;
};

// Cl(3,0)/Cl(1,2) type: Delta+, Delta-, alpha, beta, gamma, delta, epsilon, phi.
// Cl(2,1)/Cl(0,3) type: phi1, phi2, alpha, beta, gamma, delta.
// n <= 2: m (and phi = atan2(a1, a0) for Cl(0,1)).
// 4D even MVs use the even subalgebra generated by e_k e_4 and the same names.
std::optional<EinsatzParams> einsatz(const Multivector &a);

// Any A with n <= 3; absent otherwise.
std::optional<RootReport> closed_form_sqrt(const Multivector &a, const SpectralOptions &opt = {});

enum class Shape4d { none, cl40_simple, cl40_even, cl13_rotor, cl13_boost, cl13_even, cl31_even };

std::string to_string(Shape4d s);

Shape4d shape_4d(const Multivector &a);

// Even MVs of Cl(4,0), Cl(1,3), Cl(3,1); absent for any other input.
std::optional<RootReport> closed_form_sqrt_4d(const Multivector &a, const SpectralOptions &opt = {});

// closed_form_sqrt or closed_form_sqrt_4d, whichever applies.
std::optional<RootReport> closed_form_any(const Multivector &a, const SpectralOptions &opt = {});

// e2 (M + e1 sqrt(det M)) / sqrt(tr M + 2 e1 sqrt(det M)) for e1, e2 = +-1; a branch
// whose denominator vanishes is dropped.
std::vector<CMatrix> trace_det_sqrt(const CMatrix &m, double zero_tol = 1e-12);

// Cl(0,1): |A|^(1/2) (cos((phi + 2k pi)/2) + e1 sin((phi + 2k pi)/2)), phi = atan2(a1, a0).
Multivector cl01_sqrt_polar(const Multivector &a, int k = 0);
// Cl(0,1) principal root from b0^2 = (a0 + |A|)/2, b1^2 = (|A| - a0)/2, sign(b1) = sign(a1).
Multivector cl01_sqrt_principal(const Multivector &a);
// Cl(1,0), a0 > |a1|: (a0^2 - a1^2)^(1/4) (cosh(h/2) + e1 sinh(h/2)), h = artanh(a0, a1).
Multivector cl10_sqrt_hyperbolic(const Multivector &a);
// artanh(x, y) = (1/2) ln((x + y)/(x - y)).
double artanh2(double x, double y);
// Cl(0,2): (a0^2 + |m|^2)^(1/4) (cos(t/2) + u sin(t/2)), t = atan2(|m|, a0), u = (A - a0)/|m|.
Multivector cl02_sqrt_polar(const Multivector &a);
// Cl(0,2) algebraic form ((sqrt(a0+m) + sqrt(a0-m)) + (A - a0)/sqrt(m^2) (sqrt(a0+m) - sqrt(a0-m)))/2.
Multivector cl02_sqrt_algebraic(const Multivector &a);
// Cl(0,2), a0 = 0: (|m| + A)/sqrt(2|m|).
Multivector cl02_sqrt_pure(const Multivector &a);

} // namespace cliffroot
