#pragma once

// Jet fibers J^m(L^k)_x in chart coordinates. A jet stores the divided
// Taylor coefficients a_0..a_m of a local representative at its base point,
// so the Taylor polynomial is sum a_i (z - p)^i.

#include <string>
#include <vector>

#include "jetline/matrix.hpp"
#include "jetline/proj_line.hpp"
#include "jetline/ratfunc.hpp"

namespace jetline {

inline const std::string kStandardChart = "std";

class Jet {
 public:
  /// Throws BasePointAtInfinity for a non-affine base and
  /// DimensionMismatch unless coeffs.size() == order + 1.
  Jet(int weight, int order, PointP1 base, std::vector<Rational> coeffs, std::string chart = kStandardChart);

  int weight() const noexcept { return weight_; }
  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const PointP1& base() const noexcept { return base_; }
  const Rational& point() const { return base_.coordinate(); }
  const std::string& chart() const noexcept { return chart_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  const Rational& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  bool is_zero() const;

  Jet operator+(const Jet& o) const;
  Jet operator*(const Rational& s) const;
  friend bool operator==(const Jet&, const Jet&) = default;

  std::string to_string() const;

 private:
  int weight_;
  PointP1 base_;
  std::vector<Rational> coeffs_;
  std::string chart_;
};

/// Taylor polynomial sum a_i (z - p)^i of the jet, in the chart coordinate.
Poly taylor_polynomial(const Jet& j);

/// Order-m jet of the weight-k local section f at p; throws PoleAtBasePoint.
Jet jet_of_local(const RatFunc& f, int k, const PointP1& p, int m, const std::string& chart = kStandardChart);

/// Restriction of a global section F of L^n to the m-th order neighbourhood of p.
Jet eval_global(const BinaryForm& f, const PointP1& p, int m, const std::string& chart = kStandardChart);

/// Unique F in S^n(V) whose n-jet at the base is j; requires order == weight.
BinaryForm reconstruct(const Jet& j);

/// Canonical splitting J^n(L^n) -> J^m(L^n), m >= n.
Jet split(const Jet& j, int m);

/// Projection J^m -> J^n' (drops coefficients above n').
Jet truncate(const Jet& j, int order);

/// The weight-k order-n jet (0, ..., 0, c): image of K^n (x) L^k in J^n(L^k).
Jet include_top(const Rational& c, int k, int n, const PointP1& p, const std::string& chart = kStandardChart);

/// Re-expresses j in the chart reached through the transition M (chart
/// coordinate z_old = M(z_new)); the new base point is M^-1(p). An empty
/// target chart keeps the source chart's name.
Jet jet_transition(const Jet& j, const Mobius& m, const std::string& target_chart = {});

/// Chart-to-chart jet transition in coefficient coordinates as a function of
/// the symbolic target base point q: column s holds the jet at q of the
/// transported (z - M(q))^s. Entries are rational functions of q.
using JetFrameMatrix = Matrix<RatFunc>;
JetFrameMatrix raw_transition_matrix(const Mobius& m, int order, int weight);

/// Columns are the order-n jets at a point p of the monomials X^i Y^(n-i);
/// p is given as a rational function of the symbolic variable.
JetFrameMatrix eval_frame_matrix(int n, const RatFunc& p);

Matrix<Rational> evaluate(const JetFrameMatrix& m, const Rational& q);
/// True when every entry is constant (zero derivative in the symbolic point).
bool is_constant(const JetFrameMatrix& m);
Matrix<Rational> constant_part(const JetFrameMatrix& m);

}  // namespace jetline
