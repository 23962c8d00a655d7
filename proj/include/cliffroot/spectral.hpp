#pragma once
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cliffroot/algebra.hpp"
#include "cliffroot/eigen.hpp"
#include "cliffroot/rep.hpp"

namespace cliffroot {

struct SpectralOptions {
  double root_tol = 1e-8;     // ||B^2 - A||_max <= root_tol * max(1, ||A||_max)
  double imag_tol = 1e-9;     // discarded imaginary part <= imag_tol * max(1, ||B||_max)
  double perturb_eps = 1e-6;  // size of the perturbation used when T is singular
  EigenOptions eigen{};
};

enum class RootStatus { accepted, rejected_complex, rejected_residual, degenerate_skipped };

std::string to_string(RootStatus s);

struct SignPattern {
  std::vector<int> signs; // +1 / -1 per diagonal position of the spectral basis

  std::string label() const; // "(+-++)"
  SignPattern negated() const;
  bool operator==(const SignPattern &) const = default;
};

struct RootEntry {
  SignPattern pattern;
  std::string label;
  Multivector root;
  double residual = 0; // ||B^2 - A||_max
  double max_imag = 0;
  RootStatus status = RootStatus::rejected_complex;
  bool representative = false; // one member of a continuum of roots
};

struct Perturbation {
  Blade blade;
  double eps;
};

struct Diagnostics {
  std::vector<cd> eigenvalues;
  double t_condition = 0;
  bool degenerate = false;
  bool defective = false;
  std::optional<Perturbation> perturbation;
  std::string note;
};

struct RootReport {
  Multivector input;
  std::string method;
  std::vector<RootEntry> entries;
  Diagnostics diagnostics;

  std::vector<Multivector> accepted() const;
};

// Eigenbasis in which roots are diagonal. For quaternionic classes columns come in
// pairs (v, J conj(v)) carrying conjugate eigenvalues.
struct SpectralBasis {
  std::vector<cd> values;
  CMatrix t, t_inv;
  double condition = 0;
  bool degenerate = false;
  bool defective = false;
  bool usable = false;
};

SpectralBasis spectral_basis(const MatrixRep &m, const EigenOptions &opt = {});

// Binary counting, '+' before '-', first position most significant. Quaternionic
// classes repeat each sign over its pair.
std::vector<SignPattern> allowed_sign_patterns(const Representation &rep);

RootReport spectral_sqrt(const Multivector &a, const SpectralOptions &opt = {});

RootReport sqrt_minus_one(Signature sig, const SpectralOptions &opt = {});

// f applied to the eigenvalues of rep(a); throws AlgebraError on a non-real result.
Multivector mv_function(const Multivector &a, const std::function<cd(cd)> &f, const SpectralOptions &opt = {});

Multivector mv_exp(const Multivector &a, const SpectralOptions &opt = {});

// Same multiset of roots up to tol (each root matched once).
bool same_root_set(const std::vector<Multivector> &x, const std::vector<Multivector> &y, double tol);

} // namespace cliffroot
