#pragma once

// The two-dimensional space V with the determinant symplectic form, binary
// forms S^n(V), points of P(V), and the SL(2) actions on all of them.
//
// Conventions:
//  * V has basis (e1, e2) = (X, Y); a vector (x, y) is the linear form xX + yY.
//  * A binary form of degree n stores the coefficient of X^i Y^(n-i) at index i,
//    so its chart representative F(z, 1) has the same coefficient list.
//  * theta(u, w) = u.x w.y - u.y w.x.
//  * Mobius [[a, b], [c, d]] acts on the chart coordinate by z -> (az+b)/(cz+d)
//    and on weight-k local sections by f -> (cz+d)^k f(M z). This is a right
//    action; the action on forms is oriented to agree with it.

#include <functional>
#include <string>
#include <vector>

#include "jetline/matrix.hpp"
#include "jetline/ratfunc.hpp"
#include "jetline/vector_field.hpp"

namespace jetline {

struct Vec2 {
  Rational x;
  Rational y;
  bool is_zero() const { return x.is_zero() && y.is_zero(); }
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

/// Element of V*, stored as its values on (e1, e2).
struct Covec2 {
  Rational x;
  Rational y;
  Rational operator()(const Vec2& v) const { return x * v.x + y * v.y; }
  bool is_zero() const { return x.is_zero() && y.is_zero(); }
  friend bool operator==(const Covec2&, const Covec2&) = default;
};

Rational theta(const Vec2& u, const Vec2& w);

/// theta(v, .) as a covector; always annihilates v.
Covec2 symplectic_dual(const Vec2& v);
/// Inverse of symplectic_dual.
Vec2 symplectic_vector(const Covec2& w);

class BinaryForm {
 public:
  /// Zero form of the given degree.
  explicit BinaryForm(int degree);
  /// Throws DimensionMismatch unless coeffs.size() == degree + 1.
  BinaryForm(int degree, std::vector<Rational> coeffs);

  /// X^i Y^(n-i).
  static BinaryForm monomial(int degree, int i, const Rational& coeff = Rational(1));
  static BinaryForm linear(const Vec2& v) { return BinaryForm(1, {v.y, v.x}); }

  int degree() const noexcept { return n_; }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  const Rational& coeff(int i) const { return c_.at(static_cast<std::size_t>(i)); }
  bool is_zero() const;

  BinaryForm operator+(const BinaryForm& o) const;
  BinaryForm operator-(const BinaryForm& o) const;
  BinaryForm operator*(const Rational& s) const;
  BinaryForm operator*(const BinaryForm& o) const;
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

  std::string to_string() const;

 private:
  int n_;
  std::vector<Rational> c_;
};

class PointP1;

class Mobius {
 public:
  /// Throws NotUnimodular unless ad - bc == 1.
  Mobius(Rational a, Rational b, Rational c, Rational d);

  static Mobius identity() { return Mobius(1, 0, 0, 1); }
  static Mobius translation(const Rational& t) { return Mobius(1, t, 0, 1); }
  static Mobius inversion() { return Mobius(0, -1, 1, 0); }
  static Mobius scaling(const Rational& s) { return Mobius(s, 0, 0, Rational(1) / s); }

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  const Rational& c() const noexcept { return c_; }
  const Rational& d() const noexcept { return d_; }

  /// Matrix product.
  Mobius operator*(const Mobius& o) const;
  Mobius inverse() const { return Mobius(d_, -b_, -c_, a_); }
  Mobius negated() const { return Mobius(-a_, -b_, -c_, -d_); }
  friend bool operator==(const Mobius&, const Mobius&) = default;

  PointP1 operator()(const PointP1& p) const;
  /// The automorphy factor c z + d as a polynomial.
  Poly factor() const { return Poly::linear(c_, d_); }

  std::string to_string() const;

 private:
  Rational a_, b_, c_, d_;
};

/// Point [p : q] of P(V), canonically [z : 1] or [1 : 0].
class PointP1 {
 public:
  /// Throws ZeroVector for [0 : 0].
  PointP1(const Rational& p, const Rational& q);
  static PointP1 affine(const Rational& z) { return PointP1(z, 1); }
  static PointP1 infinity() { return PointP1(1, 0); }

  bool is_affine() const noexcept { return !q_.is_zero(); }
  /// Chart coordinate; throws BasePointAtInfinity at [1 : 0].
  const Rational& coordinate() const;
  const Rational& p() const noexcept { return p_; }
  const Rational& q() const noexcept { return q_; }
  friend bool operator==(const PointP1&, const PointP1&) = default;

  std::string to_string() const;

 private:
  Rational p_, q_;
};

// ---- forms and chart representatives ----

Poly dehomogenize(const BinaryForm& f);
/// Y^n p(X/Y); throws DegreeTooLarge when deg p > n.
BinaryForm homogenize(const Poly& p, int n);

/// z -> (cz+d)^k f(M z), canonicalized.
RatFunc weight_pullback(const Mobius& m, const RatFunc& f, int k);
/// f(M z); weight_pullback with k = 0.
RatFunc compose_mobius(const RatFunc& f, const Mobius& m);

/// F -> F(aX + bY, cX + dY); satisfies
/// dehomogenize(sl2_act_form(M, F)) == weight_pullback(M, dehomogenize(F), n).
BinaryForm sl2_act_form(const Mobius& m, const BinaryForm& f);
/// Matrix of sl2_act_form on S^n(V) in the monomial basis (column i = image of X^i Y^(n-i)).
Matrix<Rational> form_action_matrix(const Mobius& m, int n);
/// n-th symmetric power of a 2x2 matrix acting on V = S^1(V), built from
/// products of linear forms (independent of any jet computation).
Matrix<Rational> sym_power_matrix(const Matrix<Rational>& a, int n);

/// v^j F with v read as the linear form v.x X + v.y Y; throws ZeroVector.
BinaryForm mult_v(const BinaryForm& f, const Vec2& v, int j);

/// j-fold symmetric contraction with the covector w, in the divided-power
/// normalization (X^n contracted j times with X* is X^(n-j)):
/// (n-j)!/n! (w.x d/dX + w.y d/dY)^j F. Throws ContractionOverflow for j > n.
BinaryForm contract_omega(const BinaryForm& f, const Covec2& w, int j);

/// Vector field attached to Q in S^2(V) through T = L^2: Q -> Q(z, 1) d/dz.
VectorField s2_to_sl2(const BinaryForm& q);
BinaryForm sl2_to_s2(const VectorField& v);

/// Linear map from S^n(V) to itself (or to S^m) given as a coefficient matrix.
Matrix<Rational> form_matrix(int src_degree, int dst_degree,
                             const std::function<BinaryForm(const BinaryForm&)>& map);

std::vector<Rational> as_vector(const BinaryForm& f);

}  // namespace jetline
