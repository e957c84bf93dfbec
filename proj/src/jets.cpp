#include "jetline/jets.hpp"

#include <sstream>

#include "jetline/errors.hpp"
#include "jetline/series.hpp"

namespace jetline {

Jet::Jet(int weight, int order, PointP1 base, std::vector<Rational> coeffs, std::string chart)
    : weight_(weight), base_(std::move(base)), coeffs_(std::move(coeffs)), chart_(std::move(chart)) {
  if (!base_.is_affine()) {
    throw Error(ErrorKind::BasePointAtInfinity, "jets must be based at a finite point of their chart");
  }
  if (order < 0 || coeffs_.size() != static_cast<std::size_t>(order) + 1) {
    throw Error(ErrorKind::DimensionMismatch, "jet of order " + std::to_string(order) + " needs " +
                                                  std::to_string(order + 1) + " coefficients");
  }
}

bool Jet::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

Jet Jet::operator+(const Jet& o) const {
  if (o.weight_ != weight_ || o.order() != order() || !(o.base_ == base_) || o.chart_ != chart_) {
    throw Error(ErrorKind::DimensionMismatch, "adding jets from different fibers");
  }
  Jet r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
  return r;
}

Jet Jet::operator*(const Rational& s) const {
  Jet r = *this;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

std::string Jet::to_string() const {
  std::ostringstream os;
  os << "J^" << order() << "(L^" << weight_ << ")@" << chart_ << ":" << base_.coordinate().to_string() << "(";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? ", " : "") << coeffs_[i];
  os << ")";
  return os.str();
}

Poly taylor_polynomial(const Jet& j) { return from_taylor(j.coeffs(), j.point()); }

Jet jet_of_local(const RatFunc& f, int k, const PointP1& p, int m, const std::string& chart) {
  if (m < 0) throw Error(ErrorKind::BadOrder, "negative jet order");
  const Rational& z0 = p.coordinate();
  if (f.den()(z0).is_zero()) {
    throw Error(ErrorKind::PoleAtBasePoint, "local section " + f.to_string() + " has a pole at " + z0.to_string());
  }
  return Jet(k, m, p, ratfunc_taylor(f, z0, m), chart);
}

Jet eval_global(const BinaryForm& f, const PointP1& p, int m, const std::string& chart) {
  if (m < 0) throw Error(ErrorKind::BadOrder, "negative jet order");
  return Jet(f.degree(), m, p, taylor_coeffs(dehomogenize(f), p.coordinate(), m), chart);
}

BinaryForm reconstruct(const Jet& j) {
  if (j.order() != j.weight()) {
    throw Error(ErrorKind::OrderWeightMismatch, "reconstruct needs order == weight, got order " +
                                                    std::to_string(j.order()) + ", weight " + std::to_string(j.weight()));
  }
  return homogenize(taylor_polynomial(j), j.weight());
}

Jet split(const Jet& j, int m) {
  if (j.order() != j.weight()) {
    throw Error(ErrorKind::OrderWeightMismatch, "split needs a jet in J^n(L^n)");
  }
  if (m < j.order()) throw Error(ErrorKind::BadOrder, "split target order is below the source order");
  return eval_global(reconstruct(j), j.base(), m, j.chart());
}

Jet truncate(const Jet& j, int order) {
  if (order < 0 || order > j.order()) throw Error(ErrorKind::BadOrder, "truncation order out of range");
  std::vector<Rational> c(j.coeffs().begin(), j.coeffs().begin() + order + 1);
  return Jet(j.weight(), order, j.base(), std::move(c), j.chart());
}

Jet include_top(const Rational& c, int k, int n, const PointP1& p, const std::string& chart) {
  if (n < 0) throw Error(ErrorKind::BadOrder, "negative jet order");
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  coeffs.back() = c;
  return Jet(k, n, p, std::move(coeffs), chart);
}

Jet jet_transition(const Jet& j, const Mobius& m, const std::string& target_chart) {
  const PointP1 q = m.inverse()(j.base());
  if (!q.is_affine()) {
    throw Error(ErrorKind::BasePointAtInfinity,
                "base point " + j.base().to_string() + " is at infinity in the target chart");
  }
  const RatFunc moved = weight_pullback(m, RatFunc(taylor_polynomial(j)), j.weight());
  return Jet(j.weight(), j.order(), q, ratfunc_taylor(moved, q.coordinate(), j.order()),
             target_chart.empty() ? j.chart() : target_chart);
}

JetFrameMatrix raw_transition_matrix(const Mobius& m, int order, int weight) {
  using S = Series<RatFunc>;
  const RatFunc cq_d = RatFunc(m.factor());
  // (c(q+w) + d)^k and M(q+w) - M(q) = w / ((cq+d)(c(q+w)+d)) as series in w.
  const S moving_factor = S::linear(cq_d, RatFunc(m.c()), order);
  const S weight_factor = moving_factor.pow(weight);
  const S delta = S::linear(RatFunc(0), RatFunc(1), order) / moving_factor.scaled(cq_d);
  JetFrameMatrix out(static_cast<std::size_t>(order) + 1, static_cast<std::size_t>(order) + 1);
  S column = weight_factor;
  for (int s = 0; s <= order; ++s) {
    for (int r = 0; r <= order; ++r) out(static_cast<std::size_t>(r), static_cast<std::size_t>(s)) = column[r];
    column = column * delta;
  }
  return out;
}

JetFrameMatrix eval_frame_matrix(int n, const RatFunc& p) {
  JetFrameMatrix e(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    for (int r = 0; r <= i; ++r) {
      e(static_cast<std::size_t>(r), static_cast<std::size_t>(i)) = RatFunc(binomial(i, r)) * p.pow(i - r);
    }
  }
  return e;
}

Matrix<Rational> evaluate(const JetFrameMatrix& m, const Rational& q) {
  Matrix<Rational> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j)(q);
  return out;
}

bool is_constant(const JetFrameMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).derivative().is_zero()) return false;
  return true;
}

Matrix<Rational> constant_part(const JetFrameMatrix& m) {
  Matrix<Rational> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_constant()) throw Error(ErrorKind::NotScalar, "matrix entry is not constant");
      out(i, j) = m(i, j).constant_value();
    }
  }
  return out;
}

}  // namespace jetline
