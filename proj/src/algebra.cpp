#include "cliffroot/algebra.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>

namespace cliffroot {

Signature Signature::make(int p, int q) {
  if (p < 0 || q < 0 || p + q < 1 || p + q > 6)
    throw AlgebraError("unsupported signature Cl(" + std::to_string(p) + "," + std::to_string(q) + ")");
  return Signature{p, q};
}

std::string Signature::name() const {
  return "Cl(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

const std::vector<Signature> &all_signatures() {
  static const std::vector<Signature> sigs = [] {
    std::vector<Signature> v;
    for (int n = 1; n <= 6; ++n)
      for (int p = n; p >= 0; --p)
        v.push_back(Signature{p, n - p});
    return v;
  }();
  return sigs;
}

std::string BottClass::name() const {
  static const char *names[] = {"R", "2R", "C", "H", "2H"};
  return std::string(names[static_cast<int>(kind)]) + "(" + std::to_string(t) + ")";
}

BottClass bott_class(Signature sig) {
  const int n = sig.n();
  switch (((sig.p - sig.q) % 8 + 8) % 8) {
  case 0:
  case 2: return {BottKind::R, 1 << (n / 2)};
  case 1: return {BottKind::R2, 1 << ((n - 1) / 2)};
  case 3:
  case 7: return {BottKind::C, 1 << ((n - 1) / 2)};
  case 4:
  case 6: return {BottKind::H, 1 << ((n - 2) / 2)};
  default: return {BottKind::H2, 1 << ((n - 3) / 2)};
  }
}

BladeProduct blade_product(Blade a, Blade b, Signature sig) {
  int swaps = 0;
  for (Blade t = a >> 1; t != 0; t >>= 1)
    swaps += __builtin_popcount(t & b);
  int sign = (swaps & 1) ? -1 : 1;
  const Blade negative = ((1u << sig.n()) - 1) & ~((1u << sig.p) - 1);
  if (__builtin_popcount(a & b & negative) & 1)
    sign = -sign;
  return {a ^ b, sign};
}

int blade_square(Blade b, Signature sig) { return blade_product(b, b, sig).sign; }

std::string blade_name(Blade b) {
  if (b == 0)
    return "1";
  std::string s = "e";
  for (int i = 0; i < 6; ++i)
    if (b >> i & 1)
      s += static_cast<char>('1' + i);
  return s;
}

const std::vector<Blade> &canonical_order(int n) {
  static const std::array<std::vector<Blade>, 7> orders = [] {
    std::array<std::vector<Blade>, 7> out;
    for (int k = 0; k <= 6; ++k) {
      for (Blade b = 0; b < (1u << k); ++b)
        out[k].push_back(b);
      std::stable_sort(out[k].begin(), out[k].end(),
                       [](Blade x, Blade y) { return grade(x) < grade(y); });
    }
    return out;
  }();
  return orders.at(n);
}

namespace {

// Sign table for one signature, indexed [a * size + b].
const std::vector<signed char> &sign_table(Signature sig) {
  static std::array<std::vector<signed char>, 49> tables;
  static std::once_flag once;
  std::call_once(once, [] {
    for (const Signature &s : all_signatures()) {
      auto &t = tables[s.p * 7 + s.q];
      const int size = s.size();
      t.resize(size * size);
      for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b)
          t[a * size + b] = static_cast<signed char>(blade_product(a, b, s).sign);
    }
  });
  return tables.at(sig.p * 7 + sig.q);
}

void require_same(const Multivector &a, const Multivector &b) {
  if (!(a.signature() == b.signature()))
    throw AlgebraError("signature mismatch: " + a.signature().name() + " vs " + b.signature().name());
}

} // namespace

Multivector::Multivector(Signature sig) : sig_(Signature::make(sig.p, sig.q)), c_(sig.size(), 0.0) {}

Multivector::Multivector(Signature sig, std::vector<double> coeffs) : sig_(Signature::make(sig.p, sig.q)), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != sig.size())
    throw AlgebraError("coefficient count does not match " + sig.name());
}

Multivector Multivector::scalar(Signature sig, double value) {
  Multivector m(sig);
  m.c_[0] = value;
  return m;
}

Multivector Multivector::basis(Signature sig, Blade b, double value) {
  Multivector m(sig);
  m.c_.at(b) = value;
  return m;
}

double Multivector::norm_max() const {
  double m = 0;
  for (double x : c_)
    m = std::max(m, std::abs(x));
  return m;
}

bool Multivector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](double x) { return x == 0.0; });
}

Multivector &Multivector::operator+=(const Multivector &o) {
  require_same(*this, o);
  for (size_t i = 0; i < c_.size(); ++i)
    c_[i] += o.c_[i];
  return *this;
}

Multivector &Multivector::operator-=(const Multivector &o) {
  require_same(*this, o);
  for (size_t i = 0; i < c_.size(); ++i)
    c_[i] -= o.c_[i];
  return *this;
}

Multivector &Multivector::operator*=(double s) {
  for (double &x : c_)
    x *= s;
  return *this;
}

Multivector operator+(Multivector a, const Multivector &b) { return a += b; }
Multivector operator-(Multivector a, const Multivector &b) { return a -= b; }
Multivector operator-(Multivector a) { return a *= -1.0; }
Multivector operator*(Multivector a, double s) { return a *= s; }
Multivector operator*(double s, Multivector a) { return a *= s; }
Multivector operator/(Multivector a, double s) { return a *= 1.0 / s; }
Multivector operator*(const Multivector &a, const Multivector &b) { return geometric_product(a, b); }

Multivector geometric_product(const Multivector &a, const Multivector &b) {
  require_same(a, b);
  const Signature sig = a.signature();
  const int size = sig.size();
  const auto &table = sign_table(sig);
  const auto &x = a.coeffs();
  const auto &y = b.coeffs();
  std::vector<double> out(size, 0.0);
  for (int i = 0; i < size; ++i) {
    if (x[i] == 0.0)
      continue;
    const signed char *row = &table[i * size];
    for (int j = 0; j < size; ++j)
      if (y[j] != 0.0)
        out[i ^ j] += row[j] * x[i] * y[j];
  }
  return Multivector(sig, std::move(out));
}

Multivector grade_select(const Multivector &a, int k) {
  if (k < 0 || k > a.signature().n())
    throw AlgebraError("grade out of range");
  Multivector r = a;
  for (Blade b = 0; b < static_cast<Blade>(a.size()); ++b)
    if (grade(b) != k)
      r[b] = 0.0;
  return r;
}

Multivector reverse(const Multivector &a) {
  Multivector r = a;
  for (Blade b = 0; b < static_cast<Blade>(a.size()); ++b) {
    const int g = grade(b);
    if ((g * (g - 1) / 2) & 1)
      r[b] = -r[b];
  }
  return r;
}

Multivector grade_involution(const Multivector &a) {
  Multivector r = a;
  for (Blade b = 0; b < static_cast<Blade>(a.size()); ++b)
    if (grade(b) & 1)
      r[b] = -r[b];
  return r;
}

Multivector reciprocal(const Multivector &a) {
  const Signature sig = a.signature();
  const Blade negative = ((1u << sig.n()) - 1) & ~((1u << sig.p) - 1);
  Multivector r = a;
  for (Blade b = 0; b < static_cast<Blade>(a.size()); ++b)
    if (grade(b & negative) & 1)
      r[b] = -r[b];
  return r;
}

bool mv_approx_eq(const Multivector &a, const Multivector &b, double tol) {
  require_same(a, b);
  double diff = 0;
  for (int i = 0; i < a.size(); ++i)
    diff = std::max(diff, std::abs(a.coeffs()[i] - b.coeffs()[i]));
  return diff <= tol * (1.0 + std::max(a.norm_max(), b.norm_max()));
}

} // namespace cliffroot
