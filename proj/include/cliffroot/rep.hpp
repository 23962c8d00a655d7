#pragma once
#include <string>
#include <vector>

#include "cliffroot/algebra.hpp"
#include "cliffroot/cmatrix.hpp"

namespace cliffroot {

// Integer entry w + x*u1 + y*u2 + z*u3: u1 = i for complex classes,
// (u1,u2,u3) = (q1,q2,q3) for quaternionic ones; real classes use w only.
struct UnitEntry {
  int w = 0, x = 0, y = 0, z = 0;
  bool operator==(const UnitEntry &) const = default;
  bool is_zero() const { return w == 0 && x == 0 && y == 0 && z == 0; }
};

// One generator matrix over the algebra's division ring, entries kept symbolic.
struct SymbolicMatrix {
  int dim = 0;
  std::vector<UnitEntry> entries; // row-major
  UnitEntry at(int i, int j) const { return entries[static_cast<size_t>(i) * dim + j]; }
  bool operator==(const SymbolicMatrix &) const = default;
};

// Sum of signed unit terms such as "E11 - E22" or "-q1E12 + q1E21".
std::string to_string(const SymbolicMatrix &m, bool quaternionic);

// Complex matrix of the representation, tagged with its class.
struct MatrixRep {
  Signature sig;
  BottClass bott;
  CMatrix m;
  bool quaternion_expanded = false;
  // Diagonal index groups whose spectral signs must agree (pairs for quaternionic classes).
  std::vector<std::vector<int>> block_structure;
  int dim() const { return m.dim(); }
};

// Generator matrices exactly as tabulated for Cl(p,q), n <= 6.
std::vector<SymbolicMatrix> basis_rep_table(Signature sig);

// Idempotent, division ring and ideal basis data used by the generator.
struct IdealData {
  std::vector<Blade> idempotent_factors; // P = prod (1 + g)/2
  std::vector<Blade> division_ring;      // K = {P b P}
  std::vector<Blade> ideal_basis;        // S_j = b_j P
  bool doubled = false;                  // S also contains the grade involutes
};
const IdealData &ideal_data(Signature sig);

Multivector primitive_idempotent(Signature sig);

// Recomputes the generator matrices from E_ij(e_k) = reverse(S_i^#) e_k S_j.
// Throws AlgebraError when the division ring or the ideal basis is malformed.
std::vector<SymbolicMatrix> generate_reps_from_idempotent(Signature sig);

// Replaces q1, q2, q3 by diag(i,-i), [[0,1],[-1,0]], [[0,i],[i,0]].
MatrixRep expand_quaternions(const SymbolicMatrix &m, Signature sig);
// Complex image of a tabulated matrix for any class.
MatrixRep to_matrix_rep(const SymbolicMatrix &m, Signature sig);

// Immutable per-signature data shared by the conversions below.
class Representation {
public:
  static const Representation &get(Signature sig);

  Signature signature() const { return sig_; }
  const BottClass &bott() const { return bott_; }
  int dim() const { return dim_; }
  bool quaternionic() const { return bott_.quaternionic(); }
  const CMatrix &blade_matrix(Blade b) const { return blades_[b]; }
  const std::vector<CMatrix> &generators() const { return gens_; }
  const std::vector<std::vector<int>> &block_structure() const { return blocks_; }

  // Antiunitary structure J with M J = J conj(M) for every real multivector image
  // (quaternionic classes only).
  const CMatrix &quaternion_structure() const { return omega_; }

private:
  explicit Representation(Signature sig);
  Signature sig_;
  BottClass bott_;
  int dim_ = 0;
  std::vector<CMatrix> gens_;
  std::vector<CMatrix> blades_;
  std::vector<std::vector<int>> blocks_;
  CMatrix omega_;
};

MatrixRep mv_to_matrix(const Multivector &a);

struct MatrixDecomposition {
  Multivector mv;              // real coefficients a_J = Re Tr(M e_J^{-1}) / m
  std::vector<cd> residual;    // Tr(R e_J^{-1}) / m for R = M - rep(mv)
  double max_imag = 0;         // max-norm of R: what realness discards
};

MatrixDecomposition matrix_to_mv(const CMatrix &m, Signature sig);

} // namespace cliffroot
