#pragma once
#include <cstdint>
#include <random>
#include <vector>

#include "cliffroot/algebra.hpp"

namespace cliffroot::testing {

// Deterministic source of random multivectors for property tests.
class MvGen {
public:
  explicit MvGen(std::uint32_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Multivector dense(Signature sig, double range = 2.0) {
    Multivector a(sig);
    for (Blade b = 0; b < static_cast<Blade>(sig.size()); ++b)
      a[b] = uniform(-range, range);
    return a;
  }

  // Dense MV with a dominant positive scalar, so that real roots are likely.
  Multivector shifted(Signature sig, double shift = 6.0) {
    Multivector a = dense(sig);
    a[0] += shift;
    return a;
  }

  Multivector on_blades(Signature sig, const std::vector<Blade> &blades, double range = 2.0) {
    Multivector a(sig);
    for (Blade b : blades)
      a[b] = uniform(-range, range);
    return a;
  }

  Multivector even(Signature sig, double range = 2.0) {
    Multivector a(sig);
    for (Blade b = 0; b < static_cast<Blade>(sig.size()); ++b)
      if (grade(b) % 2 == 0)
        a[b] = uniform(-range, range);
    return a;
  }

  // A few nonzero terms with small integer coefficients.
  Multivector sparse_integer(Signature sig, int terms = 3) {
    Multivector a(sig);
    for (int k = 0; k < terms; ++k)
      a[static_cast<Blade>(integer(0, sig.size() - 1))] = integer(-3, 3);
    return a;
  }

  Signature signature(int max_n = 6) {
    int n = integer(1, max_n);
    int p = integer(0, n);
    return Signature::make(p, n - p);
  }

  std::mt19937 &engine() { return rng_; }

private:
  std::mt19937 rng_;
};

} // namespace cliffroot::testing
