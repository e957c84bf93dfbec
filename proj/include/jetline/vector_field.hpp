#pragma once

#include <string>

#include "jetline/poly.hpp"

namespace jetline {

/// Global holomorphic vector field q(z) d/dz on the projective line,
/// written in the standard chart; q has degree at most two.
class VectorField {
 public:
  VectorField() = default;
  /// Throws DegreeTooLarge when deg q > 2.
  explicit VectorField(Poly q);

  static VectorField e() { return VectorField(Poly{1}); }            // d/dz
  static VectorField h() { return VectorField(Poly{0, -2}); }        // -2z d/dz
  static VectorField f() { return VectorField(Poly{0, 0, -1}); }     // -z^2 d/dz

  const Poly& coefficient() const noexcept { return q_; }
  /// Coordinates in the basis (d/dz, z d/dz, z^2 d/dz).
  Rational coord(int i) const { return q_.coeff(i); }

  VectorField operator+(const VectorField& o) const { return VectorField(q_ + o.q_); }
  VectorField operator-(const VectorField& o) const { return VectorField(q_ - o.q_); }
  VectorField operator*(const Rational& s) const { return VectorField(q_ * s); }
  friend bool operator==(const VectorField&, const VectorField&) = default;

  std::string to_string() const { return "(" + q_.to_string() + ")*d/dz"; }

 private:
  Poly q_;
};

}  // namespace jetline
