#include "cliffroot/cmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace cliffroot {

CMatrix CMatrix::identity(int n) {
  CMatrix m(n);
  for (int i = 0; i < n; ++i)
    m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(const std::vector<cd> &d) {
  CMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.dim(); ++i)
    m(i, i) = d[i];
  return m;
}

double CMatrix::norm_max() const {
  double m = 0;
  for (const cd &x : a_)
    m = std::max(m, std::abs(x));
  return m;
}

double CMatrix::norm_one() const {
  double best = 0;
  for (int j = 0; j < n_; ++j) {
    double s = 0;
    for (int i = 0; i < n_; ++i)
      s += std::abs((*this)(i, j));
    best = std::max(best, s);
  }
  return best;
}

cd CMatrix::trace() const {
  cd t = 0;
  for (int i = 0; i < n_; ++i)
    t += (*this)(i, i);
  return t;
}

CMatrix CMatrix::adjoint() const {
  CMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      r(i, j) = std::conj((*this)(j, i));
  return r;
}

CMatrix CMatrix::conj() const {
  CMatrix r = *this;
  for (cd &x : r.a_)
    x = std::conj(x);
  return r;
}

CMatrix &CMatrix::operator+=(const CMatrix &o) {
  if (o.n_ != n_)
    throw std::invalid_argument("matrix dimension mismatch");
  for (size_t i = 0; i < a_.size(); ++i)
    a_[i] += o.a_[i];
  return *this;
}

CMatrix &CMatrix::operator-=(const CMatrix &o) {
  if (o.n_ != n_)
    throw std::invalid_argument("matrix dimension mismatch");
  for (size_t i = 0; i < a_.size(); ++i)
    a_[i] -= o.a_[i];
  return *this;
}

CMatrix &CMatrix::operator*=(cd s) {
  for (cd &x : a_)
    x *= s;
  return *this;
}

CMatrix operator+(CMatrix a, const CMatrix &b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix &b) { return a -= b; }
CMatrix operator*(CMatrix a, cd s) { return a *= s; }
CMatrix operator*(cd s, CMatrix a) { return a *= s; }

CMatrix operator*(const CMatrix &a, const CMatrix &b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("matrix dimension mismatch");
  const int n = a.dim();
  CMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const cd x = a(i, k);
      if (x == 0.0)
        continue;
      for (int j = 0; j < n; ++j)
        r(i, j) += x * b(k, j);
    }
  return r;
}

cd principal_sqrt(cd z) {
  if (z.imag() == 0.0 && z.real() < 0.0)
    return {0.0, std::sqrt(-z.real())};
  return std::sqrt(z);
}

} // namespace cliffroot
