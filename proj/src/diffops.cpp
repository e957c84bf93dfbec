#include "jetline/diffops.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "jetline/errors.hpp"

namespace jetline {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

}  // namespace

// ---- DiffOp ----

DiffOp::DiffOp(std::vector<RatFunc> coeffs, int source_weight, int target_weight)
    : c_(std::move(coeffs)), a_(source_weight), b_(target_weight) {
  while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
  if (c_.empty()) c_.emplace_back(0);
}

DiffOp DiffOp::derivative_power(int n, int source_weight, int target_weight) {
  std::vector<RatFunc> c(idx(n) + 1);
  c.back() = RatFunc(1);
  return DiffOp(std::move(c), source_weight, target_weight);
}

DiffOp DiffOp::multiplication(const RatFunc& g, int source_weight, int target_weight) {
  return DiffOp({g}, source_weight, target_weight);
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
  if (o.a_ != a_ || o.b_ != b_) throw Error(ErrorKind::DimensionMismatch, "adding operators with different weights");
  std::vector<RatFunc> c(std::max(c_.size(), o.c_.size()));
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j < c_.size()) c[j] += c_[j];
    if (j < o.c_.size()) c[j] += o.c_[j];
  }
  return DiffOp(std::move(c), a_, b_);
}

DiffOp DiffOp::operator*(const RatFunc& s) const {
  std::vector<RatFunc> c = c_;
  for (auto& x : c) x *= s;
  return DiffOp(std::move(c), a_, b_);
}

DiffOp DiffOp::compose(const DiffOp& inner) const {
  // (p d^i) o (q d^j) = p sum_t binom(i, t) q^(t) d^(i - t + j)
  const int oi = order();
  const int oj = inner.order();
  std::vector<RatFunc> out(idx(oi + oj) + 1);
  for (int j = 0; j <= oj; ++j) {
    if (inner.c_[idx(j)].is_zero()) continue;
    RatFunc qd = inner.c_[idx(j)];
    std::vector<RatFunc> derivs{qd};
    for (int t = 1; t <= oi; ++t) derivs.push_back(derivs.back().derivative());
    for (int i = 0; i <= oi; ++i) {
      if (c_[idx(i)].is_zero()) continue;
      for (int t = 0; t <= i; ++t) {
        if (derivs[idx(t)].is_zero()) continue;
        out[idx(i - t + j)] += c_[idx(i)] * derivs[idx(t)] * RatFunc(binomial(i, t));
      }
    }
  }
  return DiffOp(std::move(out), inner.a_, b_);
}

std::string DiffOp::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int j = order(); j >= 0; --j) {
    const RatFunc& c = c_[idx(j)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (j > 0) os << "*d" << (j > 1 ? "^" + std::to_string(j) : "");
  }
  if (first) os << "0";
  os << " : L^" << a_ << " -> L^" << b_;
  return os.str();
}

RatFunc apply_op(const DiffOp& p, const RatFunc& f) {
  RatFunc acc;
  RatFunc deriv = f;
  for (int j = 0; j <= p.order(); ++j) {
    if (j > 0) deriv = deriv.derivative();
    if (!p.coeff(j).is_zero()) acc += p.coeff(j) * deriv;
  }
  return acc;
}

Symbol symbol(const DiffOp& p) {
  return Symbol{p.coeff(p.order()), 2 * p.order() + p.target_weight() - p.source_weight()};
}

DiffOp conjugate(const DiffOp& p, const Mobius& m) {
  // With u = M(z): f(u) = (cz+d)^-a g(z) where g is the pulled-back section,
  // and d/du = (cz+d)^2 d/dz. Hence f^(j)(u) = D_j g with
  // D_j = ((cz+d)^2 d)^j o (cz+d)^-a, and
  // P^M = (cz+d)^b sum_j c_j(M z) D_j.
  const int a = p.source_weight();
  const int b = p.target_weight();
  const RatFunc factor(m.factor());
  const DiffOp step({RatFunc(0), factor.pow(2)}, a, a);
  DiffOp dj = DiffOp::multiplication(factor.pow(-a), a, a);
  DiffOp out({RatFunc(0)}, a, b);
  const RatFunc outer = factor.pow(b);
  for (int j = 0; j <= p.order(); ++j) {
    if (j > 0) dj = step.compose(dj);
    if (p.coeff(j).is_zero()) continue;
    const RatFunc cj = compose_mobius(p.coeff(j), m) * outer;
    out = out + DiffOp::multiplication(cj, a, b).compose(dj);
  }
  return out;
}

// ---- Bol ----

Rational bol_pointwise(int n, const Jet& j) {
  if (j.order() != n + 1 || j.weight() != n) {
    throw Error(ErrorKind::OrderWeightMismatch, "bol_pointwise needs a weight-n jet of order n+1");
  }
  const Jet extended = split(truncate(j, n), n + 1);
  return factorial(static_cast<unsigned>(n + 1)) * (j.coeff(n + 1) - extended.coeff(n + 1));
}

DiffOp bol_operator(int n) {
  if (n < 0) throw Error(ErrorKind::IndexOutOfRange, "bol_operator needs n >= 0");
  return DiffOp::derivative_power(n + 1, n, -n - 2);
}

// ---- CMZ ----

Rational cmz_coefficient(int n, int i) {
  if (n < 1 || i < 0 || i > n - 1) {
    throw Error(ErrorKind::IndexOutOfRange,
                "cmz_coefficient(" + std::to_string(n) + ", " + std::to_string(i) + ") needs 0 <= i < n");
  }
  const auto u = [](int v) { return static_cast<unsigned>(v); };
  return factorial(u(2 * n - i)) / (factorial(u(i)) * factorial(u(n - i)) * factorial(u(n - i - 1)));
}

DiffOp cmz_operator(int n, const RatFunc& f) {
  if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "cmz_operator needs n >= 1");
  std::vector<RatFunc> c(idx(n) + 1);
  RatFunc deriv = f;
  for (int i = 0; i <= n - 1; ++i) {
    if (i > 0) deriv = deriv.derivative();
    c[idx(n - i)] = deriv * RatFunc(cmz_coefficient(n, i));
  }
  return DiffOp(std::move(c), 0, 0);
}

Rational phi_normalization(int n) {
  const auto u = [](int v) { return static_cast<unsigned>(v); };
  return factorial(u(n)) * factorial(u(n - 1)) / factorial(u(2 * n));
}

std::string FiberOp::to_string() const {
  std::ostringstream os;
  os << base.to_string() << ":(";
  for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? ", " : "") << coeffs[i];
  os << ")";
  return os.str();
}

namespace {

FiberOp fiber_of(const DiffOp& op, int n, const PointP1& p) {
  FiberOp out{p, std::vector<Rational>(idx(n) + 1)};
  for (int j = 0; j <= op.order() && j <= n; ++j) out.coeffs[idx(j)] = op.coeff(j)(p.coordinate());
  return out;
}

void check_phi_jet(int n, const Jet& j) {
  if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "phi needs n >= 1");
  if (j.order() != n - 1 || j.weight() != 2 * n) {
    throw Error(ErrorKind::OrderWeightMismatch, "phi needs a jet of weight 2n and order n-1");
  }
}

}  // namespace

FiberOp phi_of_section(int n, const RatFunc& f, const PointP1& p) {
  return fiber_of(cmz_operator(n, f) * RatFunc(phi_normalization(n)), n, p);
}

FiberOp phi_apply(int n, const Jet& j) {
  check_phi_jet(n, j);
  return phi_of_section(n, RatFunc(taylor_polynomial(j)), j.base());
}

FiberOp phi_apply_unnormalized(int n, const Jet& j) {
  check_phi_jet(n, j);
  return fiber_of(cmz_operator(n, RatFunc(taylor_polynomial(j))), n, j.base());
}

// ---- linear algebra at a point ----

Vec2 kernel_vector(const PointP1& x) { return Vec2{x.q(), -x.p()}; }

Covec2 point_covector(const PointP1& x) { return symplectic_dual(kernel_vector(x)); }

namespace {

void check_point_covector(const PointP1& x, const Covec2& w) {
  if (w.is_zero()) throw Error(ErrorKind::InconsistentPointCovector, "omega must be nonzero");
  const Vec2 v = symplectic_vector(w);
  // v, read as a linear form, must vanish at [p : q].
  if (!(v.x * x.p() + v.y * x.q()).is_zero()) {
    throw Error(ErrorKind::InconsistentPointCovector, "the symplectic dual of omega does not vanish at " + x.to_string());
  }
}

}  // namespace

FiberMap phi_fiber_contraction(int n, const PointP1& x, const Covec2& w) {
  if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "phi needs n >= 1");
  check_point_covector(x, w);
  return FiberMap{2 * n, n - 1,
                  form_matrix(2 * n, n - 1, [&](const BinaryForm& f) { return contract_omega(f, w, n + 1); })};
}

Matrix<Rational> beta_matrix(int n, const PointP1& x) {
  Matrix<Rational> m(idx(n), idx(2 * n) + 1);
  for (int i = 0; i <= 2 * n; ++i) m.set_column(idx(i), eval_global(BinaryForm::monomial(2 * n, i), x, n - 1).coeffs());
  return m;
}

Matrix<Rational> mult_v_matrix(int n, const Vec2& v) {
  return form_matrix(n, 2 * n, [&](const BinaryForm& f) { return mult_v(f, v, n); });
}

Matrix<Rational> derivation_matrix(const Matrix<Rational>& a, int k) {
  const BinaryForm x_image = BinaryForm::linear(Vec2{a(0, 0), a(1, 0)});
  const BinaryForm y_image = BinaryForm::linear(Vec2{a(0, 1), a(1, 1)});
  return form_matrix(k, k, [&](const BinaryForm& f) {
    BinaryForm out(k);
    for (int i = 0; i <= k; ++i) {
      if (f.coeff(i).is_zero()) continue;
      if (i > 0) out = out + BinaryForm::monomial(k - 1, i - 1, f.coeff(i) * Rational(i)) * x_image;
      if (i < k) out = out + BinaryForm::monomial(k - 1, i, f.coeff(i) * Rational(k - i)) * y_image;
    }
    return out;
  });
}

namespace {

Vec2 unit_preimage(const PointP1& x) {
  // A vector u with omega(u) = 1 for omega = point_covector(x).
  const Covec2 w = point_covector(x);
  if (!w.y.is_zero()) return Vec2{Rational(0), Rational(1) / w.y};
  return Vec2{Rational(1) / w.x, Rational(0)};
}

}  // namespace

Matrix<Rational> nilpotent_at(const PointP1& x) {
  const Vec2 v = kernel_vector(x);
  const Covec2 w = point_covector(x);
  Matrix<Rational> n(2, 2);
  n(0, 0) = v.x * w.x;
  n(0, 1) = v.x * w.y;
  n(1, 0) = v.y * w.x;
  n(1, 1) = v.y * w.y;
  return n;
}

Matrix<Rational> torus_at(const PointP1& x) {
  const Vec2 v = kernel_vector(x);
  const Vec2 u = unit_preimage(x);
  Matrix<Rational> basis(2, 2);
  basis(0, 0) = v.x;
  basis(1, 0) = v.y;
  basis(0, 1) = u.x;
  basis(1, 1) = u.y;
  Matrix<Rational> diag(2, 2);
  diag(0, 0) = Rational(1);
  diag(1, 1) = Rational(-1);
  return basis * diag * *basis.inverse();
}

namespace {

// Solves for h (rows x cols) subject to a list of linear constraints, each
// given as a function returning the constraint matrix for a unit h.
std::vector<Matrix<Rational>> solve_hom_space(std::size_t rows, std::size_t cols,
                                              const std::vector<std::function<Matrix<Rational>(const Matrix<Rational>&)>>& constraints) {
  const std::size_t unknowns = rows * cols;
  std::vector<std::vector<Rational>> equations;
  std::vector<Matrix<Rational>> images;
  for (std::size_t u = 0; u < unknowns; ++u) {
    Matrix<Rational> unit(rows, cols);
    unit(u / cols, u % cols) = Rational(1);
    std::vector<Rational> column;
    for (const auto& c : constraints) {
      const Matrix<Rational> img = c(unit);
      for (std::size_t i = 0; i < img.rows(); ++i)
        for (std::size_t j = 0; j < img.cols(); ++j) column.push_back(img(i, j));
    }
    if (equations.empty()) equations.resize(column.size(), std::vector<Rational>(unknowns));
    for (std::size_t e = 0; e < column.size(); ++e) equations[e][u] = column[e];
  }
  Matrix<Rational> system(equations.size(), unknowns);
  for (std::size_t e = 0; e < equations.size(); ++e)
    for (std::size_t u = 0; u < unknowns; ++u) system(e, u) = equations[e][u];
  std::vector<Matrix<Rational>> basis;
  for (const auto& sol : system.null_space()) {
    Matrix<Rational> h(rows, cols);
    for (std::size_t u = 0; u < unknowns; ++u) h(u / cols, u % cols) = sol[u];
    basis.push_back(std::move(h));
  }
  return basis;
}

}  // namespace

std::vector<Matrix<Rational>> n_equivariant_homs(int n, const PointP1& x) {
  if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "n must be >= 1");
  const Matrix<Rational> nil = nilpotent_at(x);
  const Matrix<Rational> n_src = derivation_matrix(nil, 2 * n);
  const Matrix<Rational> n_dst = derivation_matrix(nil, n - 1);
  const Matrix<Rational> mv = mult_v_matrix(n, kernel_vector(x));
  return solve_hom_space(idx(n), idx(2 * n) + 1,
                         {[&](const Matrix<Rational>& h) { return h * n_src - n_dst * h; },
                          [&](const Matrix<Rational>& h) { return h * mv; }});
}

std::vector<Matrix<Rational>> n_equivariant_weighted_homs(int n, const PointP1& x) {
  if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "n must be >= 1");
  const Matrix<Rational> nil = nilpotent_at(x);
  const Matrix<Rational> tor = torus_at(x);
  const Matrix<Rational> n_src = derivation_matrix(nil, 2 * n);
  const Matrix<Rational> n_dst = derivation_matrix(nil, n - 1);
  const Matrix<Rational> h_src = derivation_matrix(tor, 2 * n);
  const Matrix<Rational> h_dst = derivation_matrix(tor, n - 1);
  const Matrix<Rational> mv = mult_v_matrix(n, kernel_vector(x));
  const Rational shift(n + 1);
  return solve_hom_space(idx(n), idx(2 * n) + 1,
                         {[&](const Matrix<Rational>& h) { return h * n_src - n_dst * h; },
                          [&](const Matrix<Rational>& h) { return h * mv; },
                          [&](const Matrix<Rational>& h) { return h_dst * h - h * h_src - h.scaled(shift); }});
}

Matrix<Rational> residue_identification(int n, const PointP1& x, const Covec2& w) {
  check_point_covector(x, w);
  const Rational& p = x.coordinate();
  const Rational lambda = w.y;  // omega = lambda (p, 1)
  const BinaryForm v = BinaryForm::linear(Vec2{Rational(1), -p});
  const BinaryForm y = BinaryForm::monomial(1, 0);
  Matrix<Rational> m(idx(n), idx(n));
  for (int j = 1; j <= n; ++j) {
    BinaryForm col(0, {factorial(static_cast<unsigned>(j)) * lambda.pow(n - 1)});
    for (int t = 0; t < n - j; ++t) col = col * v;
    for (int t = 0; t < j - 1; ++t) col = col * y;
    m.set_column(idx(j - 1), col.coeffs());
  }
  return m;
}

Matrix<Rational> phi_matrix_via_jets(int n, const PointP1& x) {
  Matrix<Rational> m(idx(n), idx(2 * n) + 1);
  for (int i = 0; i <= 2 * n; ++i) {
    const FiberOp op = phi_apply(n, eval_global(BinaryForm::monomial(2 * n, i), x, n - 1));
    std::vector<Rational> col(op.coeffs.begin() + 1, op.coeffs.end());
    m.set_column(idx(i), col);
  }
  return m;
}

Matrix<Rational> phi_matrix_via_contraction(int n, const PointP1& x, const Covec2& w) {
  const FiberMap contraction = phi_fiber_contraction(n, x, w);
  const auto inv = residue_identification(n, x, w).inverse();
  if (!inv) throw Error(ErrorKind::NotScalar, "residue identification is singular");
  Matrix<Rational> raw = *inv * contraction.matrix;
  // Y^2n has value 1 at every affine point; its symbol coefficient fixes the scale.
  const Rational top = raw(idx(n - 1), 0);
  if (top.is_zero()) throw Error(ErrorKind::NotScalar, "contraction route has vanishing symbol");
  return raw.scaled(Rational(1) / top);
}

}  // namespace jetline
