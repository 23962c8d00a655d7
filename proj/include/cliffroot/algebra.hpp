#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cliffroot {

class AlgebraError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Cl(p,q): e_1..e_p square to +1, e_{p+1}..e_n to -1.
struct Signature {
  int p = 0;
  int q = 0;

  constexpr int n() const { return p + q; }
  constexpr int size() const { return 1 << (p + q); }
  constexpr bool operator==(const Signature &) const = default;

  static Signature make(int p, int q);
  std::string name() const; // "Cl(3,0)"
};

// Every supported signature, ordered by n then descending p.
const std::vector<Signature> &all_signatures();

enum class BottKind { R, R2, C, H, H2 };

struct BottClass {
  BottKind kind = BottKind::R;
  int t = 1; // matrix dimension of one irreducible block

  int blocks() const { return kind == BottKind::R2 || kind == BottKind::H2 ? 2 : 1; }
  bool quaternionic() const { return kind == BottKind::H || kind == BottKind::H2; }
  // Size of the complex matrices used by the spectral method.
  int complex_dim() const { return blocks() * t * (quaternionic() ? 2 : 1); }
  // Independent diagonal sign choices; the root count bound is 2^sign_slots().
  int sign_slots() const { return blocks() * t; }
  long max_roots() const { return 1L << sign_slots(); }
  std::string name() const; // "2R(2)", "H(4)"
};

BottClass bott_class(Signature sig);

// Blade e_J as a bitmask: bit i set means e_{i+1} is a factor, factors ascending.
using Blade = std::uint32_t;

constexpr int grade(Blade b) { return __builtin_popcount(b); }

struct BladeProduct {
  Blade blade;
  int sign;
};

BladeProduct blade_product(Blade a, Blade b, Signature sig);

// +1 or -1 such that e_J e_J = sign.
int blade_square(Blade b, Signature sig);

std::string blade_name(Blade b); // "1", "e13"

// Ascending grade, then ascending mask.
const std::vector<Blade> &canonical_order(int n);

class Multivector {
public:
  Multivector() = default;
  explicit Multivector(Signature sig);
  Multivector(Signature sig, std::vector<double> coeffs);

  static Multivector scalar(Signature sig, double value);
  static Multivector basis(Signature sig, Blade b, double value = 1.0);

  Signature signature() const { return sig_; }
  int size() const { return static_cast<int>(c_.size()); }
  double operator[](Blade b) const { return c_.at(b); }
  double &operator[](Blade b) { return c_.at(b); }
  const std::vector<double> &coeffs() const { return c_; }

  double norm_max() const;
  bool is_zero() const;

  Multivector &operator+=(const Multivector &o);
  Multivector &operator-=(const Multivector &o);
  Multivector &operator*=(double s);

private:
  Signature sig_{};
  std::vector<double> c_;
};

Multivector operator+(Multivector a, const Multivector &b);
Multivector operator-(Multivector a, const Multivector &b);
Multivector operator-(Multivector a);
Multivector operator*(Multivector a, double s);
Multivector operator*(double s, Multivector a);
Multivector operator/(Multivector a, double s);
Multivector operator*(const Multivector &a, const Multivector &b);

Multivector geometric_product(const Multivector &a, const Multivector &b);
Multivector grade_select(const Multivector &a, int k);
Multivector reverse(const Multivector &a);
Multivector grade_involution(const Multivector &a);
// Replaces every e_i with its reciprocal e^i = e_i^{-1}.
Multivector reciprocal(const Multivector &a);

// max|a_J - b_J| <= tol * (1 + max(|A|, |B|)) in the max-norm.
bool mv_approx_eq(const Multivector &a, const Multivector &b, double tol);

} // namespace cliffroot
