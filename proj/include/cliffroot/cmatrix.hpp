#pragma once
#include <complex>
#include <vector>

namespace cliffroot {

using cd = std::complex<double>;

// Dense row-major complex square matrix; the algebras here need m <= 8.
class CMatrix {
public:
  CMatrix() = default;
  explicit CMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

  static CMatrix identity(int n);
  static CMatrix diagonal(const std::vector<cd> &d);

  int dim() const { return n_; }
  cd &operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  cd operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  double norm_max() const;
  double norm_one() const;
  cd trace() const;
  CMatrix adjoint() const;
  CMatrix conj() const;

  CMatrix &operator+=(const CMatrix &o);
  CMatrix &operator-=(const CMatrix &o);
  CMatrix &operator*=(cd s);

private:
  int n_ = 0;
  std::vector<cd> a_;
};

CMatrix operator+(CMatrix a, const CMatrix &b);
CMatrix operator-(CMatrix a, const CMatrix &b);
CMatrix operator*(CMatrix a, cd s);
CMatrix operator*(cd s, CMatrix a);
CMatrix operator*(const CMatrix &a, const CMatrix &b);

// Principal square root with the cut on the negative real axis and
// sqrt(-x) = +i sqrt(x) for x > 0, independent of the sign of a zero imaginary part.
cd principal_sqrt(cd z);

} // namespace cliffroot
