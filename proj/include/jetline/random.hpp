#pragma once

// Seeded generators for property suites. std::mt19937_64 is fully specified
// by the standard, and values are mapped by modulo, so a seed gives the same
// cases on every platform.

#include <cstdint>
#include <random>

#include "jetline/proj_line.hpp"

namespace jetline {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  /// Uniform in [lo, hi].
  long uniform(long lo, long hi) { return lo + static_cast<long>(g_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  /// p/q with |p| <= max_abs and 1 <= q <= max_den.
  Rational rational(long max_abs = 4, long max_den = 3) { return Rational(uniform(-max_abs, max_abs), uniform(1, max_den)); }
  Rational nonzero_rational(long max_abs = 4, long max_den = 3);

  /// Product translation * lower-triangular * scaling with random rational
  /// parameters; c != 0 most of the time, so the automorphy factor is non-trivial.
  Mobius mobius();
  Poly poly(int max_degree);
  BinaryForm form(int degree);
  PointP1 affine_point() { return PointP1::affine(rational()); }

 private:
  std::mt19937_64 g_;
};

}  // namespace jetline
