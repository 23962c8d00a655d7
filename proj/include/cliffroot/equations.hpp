#pragma once
#include <string>
#include <vector>

#include "cliffroot/algebra.hpp"
#include "cliffroot/spectral.hpp"

namespace cliffroot {

// Inverse through the matrix representation; throws SingularMatrixError.
Multivector mv_inverse(const Multivector &a, double condition_limit = 1e12);

// Commutes with every basis blade to tol * max(1, |A|).
bool is_central(const Multivector &a, double tol = 1e-10);

struct Solution {
  std::string label;  // sign pattern of the root R used
  Multivector root;   // R
  Multivector x;
  double residual = 0; // max-norm of the equation's left side minus its right side
  bool verified = false;
};

struct SolutionReport {
  std::string equation;
  Multivector radicand; // the MV whose roots R are taken
  RootReport roots;
  std::vector<Solution> solutions; // verified only
  std::vector<Solution> rejected;  // failed re-substitution
};

// X^2 + A X + X A + B = 0 through X = -A + R, R^2 = A^2 - B.
SolutionReport solve_quadratic(const Multivector &a, const Multivector &b, const SpectralOptions &opt = {},
                               double verify_tol = 1e-8);

struct RiccatiProblem {
  enum class Sign { plus, minus, both };
  Multivector a, b, c; // c central
  Sign sign = Sign::plus;
};

// X A X + C X + X C = B through X = (-C +- R) A^{-1}, R^2 = B A + C^2.
// Throws AlgebraError when C is not central, SingularMatrixError when A is singular.
SolutionReport solve_riccati(const RiccatiProblem &prob, const SpectralOptions &opt = {}, double verify_tol = 1e-8);

} // namespace cliffroot
