#pragma once

// Differential operators sum_j c_j(z) d^j between weighted local sections,
// the Bol-type operators arising as the defect of the canonical splitting,
// the CMZ family and the fiber isomorphism phi built from it, together with
// the finite-dimensional linear algebra on symmetric powers behind phi.

#include <string>
#include <vector>

#include "jetline/jets.hpp"
#include "jetline/matrix.hpp"
#include "jetline/proj_line.hpp"
#include "jetline/ratfunc.hpp"

namespace jetline {

class DiffOp {
 public:
  /// Trailing zero coefficients are dropped, so order() is the true order
  /// (0 for the zero operator).
  DiffOp(std::vector<RatFunc> coeffs, int source_weight, int target_weight);

  /// d^n between the given weights.
  static DiffOp derivative_power(int n, int source_weight, int target_weight);
  /// Multiplication by g (order zero).
  static DiffOp multiplication(const RatFunc& g, int source_weight, int target_weight);

  int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<RatFunc>& coeffs() const noexcept { return c_; }
  const RatFunc& coeff(int j) const { return c_.at(static_cast<std::size_t>(j)); }
  int source_weight() const noexcept { return a_; }
  int target_weight() const noexcept { return b_; }
  bool is_zero() const noexcept { return c_.size() == 1 && c_[0].is_zero(); }

  DiffOp operator+(const DiffOp& o) const;
  DiffOp operator*(const RatFunc& s) const;
  /// Composition (*this) o inner; weights run inner.source -> this.target.
  DiffOp compose(const DiffOp& inner) const;
  friend bool operator==(const DiffOp&, const DiffOp&) = default;

  std::string to_string() const;

 private:
  std::vector<RatFunc> c_;
  int a_;
  int b_;
};

RatFunc apply_op(const DiffOp& p, const RatFunc& f);

struct Symbol {
  RatFunc value;
  /// The symbol is a section of L^weight, weight = 2N + b - a.
  int weight;
};
Symbol symbol(const DiffOp& p);

/// The operator P^M with apply_op(P^M, weight_pullback(M, f, a)) ==
/// weight_pullback(M, apply_op(P, f), b) for every f, by exact chain-rule
/// expansion.
DiffOp conjugate(const DiffOp& p, const Mobius& m);

// ---- Bol-type operators ----

/// (n+1)! times the difference between the top coefficient of j and that of
/// the canonical splitting of its n-jet. j must have weight n and order n+1.
Rational bol_pointwise(int n, const Jet& j);

/// d^(n+1) from weight n to weight -n-2.
DiffOp bol_operator(int n);

// ---- CMZ operators ----

/// (2n-i)! / (i! (n-i)! (n-i-1)!); throws IndexOutOfRange outside 0 <= i < n.
Rational cmz_coefficient(int n, int i);

/// sum_{i<n} cmz_coefficient(n, i) f^(i) d^(n-i), weights (0, 0).
DiffOp cmz_operator(int n, const RatFunc& f);

/// n!(n-1)!/(2n)!, the scalar making the CMZ symbol equal the 0-th jet coefficient.
Rational phi_normalization(int n);

/// Coefficients c_0..c_n of a differential operator at a single point.
struct FiberOp {
  PointP1 base;
  std::vector<Rational> coeffs;
  friend bool operator==(const FiberOp&, const FiberOp&) = default;
  std::string to_string() const;
};

/// phi_x applied to a jet of weight 2n and order n-1.
FiberOp phi_apply(int n, const Jet& j);
/// Same without the normalization scalar (glues, but fails sigma o phi = gamma).
FiberOp phi_apply_unnormalized(int n, const Jet& j);
/// The normalized CMZ operator of a local weight-2n section, evaluated at p.
FiberOp phi_of_section(int n, const RatFunc& f, const PointP1& p);

// ---- linear algebra on S^k(V) at a point ----

/// Generator v of the kernel of V -> L_x (the linear forms vanishing at x).
Vec2 kernel_vector(const PointP1& x);
/// The covector omega = symplectic_dual(kernel_vector(x)).
Covec2 point_covector(const PointP1& x);

/// Matrix of F -> contract_omega(F, w, n + 1) from S^2n(V) to S^(n-1)(V).
/// Throws InconsistentPointCovector unless symplectic_vector(w) vanishes at x.
struct FiberMap {
  int src_degree;
  int dst_degree;
  Matrix<Rational> matrix;
};
FiberMap phi_fiber_contraction(int n, const PointP1& x, const Covec2& w);

/// beta: S^2n(V) -> J^(n-1)(L^2n)_x, columns are jets of monomials.
Matrix<Rational> beta_matrix(int n, const PointP1& x);
/// m_v: S^n(V) -> S^2n(V), F -> v^n F.
Matrix<Rational> mult_v_matrix(int n, const Vec2& v);

/// Action of an endomorphism of V (2x2 matrix on (e1, e2)) on S^k(V) as a derivation.
Matrix<Rational> derivation_matrix(const Matrix<Rational>& a, int k);
/// Nilpotent N with N(w) = w(omega) v: kills v and sends a preimage of omega to v.
Matrix<Rational> nilpotent_at(const PointP1& x);
/// Semisimple H with H v = v and H u = -u, where omega(u) = 1.
Matrix<Rational> torus_at(const PointP1& x);

/// Basis of {h : S^2n -> S^(n-1) | h N = N h, h m_v = 0} (at the point x).
std::vector<Matrix<Rational>> n_equivariant_homs(int n, const PointP1& x = PointP1::affine(0));
/// The same space cut down by the torus condition H h - h H = (n+1) h.
std::vector<Matrix<Rational>> n_equivariant_weighted_homs(int n, const PointP1& x = PointP1::affine(0));

/// The identification Diff^n_0(O,O)_x -> S^(n-1)(V) obtained from the
/// residue pairing: sum_j c_j d^j -> sum_j c_j j! v^(n-j) u^(j-1) (x affine,
/// v = X - pY, u = Y, scaled by omega).
Matrix<Rational> residue_identification(int n, const PointP1& x, const Covec2& w);

/// phi o beta as a matrix S^2n(V) -> (c_1..c_n) through the CMZ route.
Matrix<Rational> phi_matrix_via_jets(int n, const PointP1& x);
/// The contraction route: residue_identification^-1 o i_omega, rescaled so
/// the symbol coefficient equals the value of the section at x.
Matrix<Rational> phi_matrix_via_contraction(int n, const PointP1& x, const Covec2& w);

}  // namespace jetline
