#pragma once
#include <stdexcept>
#include <vector>

#include "cliffroot/cmatrix.hpp"

namespace cliffroot {

class SingularMatrixError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct EigenOptions {
  double degeneracy_tol = 1e-8;  // relative distance below which eigenvalues coincide
  double condition_limit = 1e12; // T is treated as singular above this 1-norm condition
  double rank_tol = 1e-6;        // relative pivot threshold when spanning a degenerate eigenspace
  int max_sweeps = 400;
};

struct Eigensystem {
  std::vector<cd> values; // sorted by (Re, Im); coinciding eigenvalues are adjacent
  CMatrix vectors;        // column k belongs to values[k]
  std::vector<int> cluster; // eigenvalues sharing an id coincide within degeneracy_tol
  double condition = 0;   // 1-norm condition estimate of vectors
  bool degenerate = false;
  bool defective = false; // some eigenspace is smaller than its multiplicity
  bool singular = false;  // defective or condition above the limit
};

// Eigenvalues only, from a Hessenberg + shifted QR Schur reduction, sorted by (Re, Im).
std::vector<cd> eigenvalues(const CMatrix &m, const EigenOptions &opt = {});

// Eigenvectors come from inverse iteration for simple eigenvalues and from a
// reduced-echelon null-space basis (free columns taken last to first) for
// coinciding ones. Each column has unit 2-norm and a real positive leading entry.
Eigensystem eigensystem(const CMatrix &m, const EigenOptions &opt = {});

double condition_number(const CMatrix &m);

// Throws SingularMatrixError when the condition exceeds the limit.
CMatrix invert(const CMatrix &m, double condition_limit = 1e12);

// Fixes phase and length: unit 2-norm, first nonzero component real positive.
void normalize_column(CMatrix &v, int col);

} // namespace cliffroot
