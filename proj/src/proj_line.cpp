#include "jetline/proj_line.hpp"

#include <sstream>

#include "jetline/errors.hpp"

namespace jetline {

VectorField::VectorField(Poly q) : q_(std::move(q)) {
  if (q_.degree() > 2) throw Error(ErrorKind::DegreeTooLarge, "global vector fields have degree <= 2");
}

Rational theta(const Vec2& u, const Vec2& w) { return u.x * w.y - u.y * w.x; }

Covec2 symplectic_dual(const Vec2& v) { return Covec2{-v.y, v.x}; }

Vec2 symplectic_vector(const Covec2& w) { return Vec2{w.y, -w.x}; }

// ---- BinaryForm ----

BinaryForm::BinaryForm(int degree) : n_(degree), c_(static_cast<std::size_t>(degree) + 1) {
  if (degree < 0) throw Error(ErrorKind::BadOrder, "negative form degree");
}

BinaryForm::BinaryForm(int degree, std::vector<Rational> coeffs) : n_(degree), c_(std::move(coeffs)) {
  if (degree < 0 || c_.size() != static_cast<std::size_t>(degree) + 1) {
    throw Error(ErrorKind::DimensionMismatch, "binary form of degree " + std::to_string(degree) + " needs " +
                                                  std::to_string(degree + 1) + " coefficients");
  }
}

BinaryForm BinaryForm::monomial(int degree, int i, const Rational& coeff) {
  BinaryForm f(degree);
  f.c_.at(static_cast<std::size_t>(i)) = coeff;
  return f;
}

bool BinaryForm::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
  if (o.n_ != n_) throw Error(ErrorKind::DimensionMismatch, "adding forms of different degree");
  BinaryForm r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const { return *this + o * Rational(-1); }

BinaryForm BinaryForm::operator*(const Rational& s) const {
  BinaryForm r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
  BinaryForm r(n_ + o.n_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  return r;
}

std::string BinaryForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = n_; i >= 0; --i) {
    const Rational& a = c_[static_cast<std::size_t>(i)];
    if (a.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const int j = n_ - i;
    const bool bare = (i > 0 || j > 0) && a.is_one();
    if (!bare) os << (a.is_integer() ? a.to_string() : "(" + a.to_string() + ")");
    if (i > 0) os << (bare ? "" : "*") << "X" << (i > 1 ? "^" + std::to_string(i) : "");
    if (j > 0) os << ((bare && i == 0) ? "" : "*") << "Y" << (j > 1 ? "^" + std::to_string(j) : "");
  }
  return first ? "0" : os.str();
}

// ---- Mobius / PointP1 ----

Mobius::Mobius(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ * d_ - b_ * c_ != Rational(1)) {
    throw Error(ErrorKind::NotUnimodular, "determinant of " + to_string() + " is not 1");
  }
}

Mobius Mobius::operator*(const Mobius& o) const {
  return Mobius(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
}

PointP1 Mobius::operator()(const PointP1& p) const {
  return PointP1(a_ * p.p() + b_ * p.q(), c_ * p.p() + d_ * p.q());
}

std::string Mobius::to_string() const {
  return "[[" + a_.to_string() + ", " + b_.to_string() + "], [" + c_.to_string() + ", " + d_.to_string() + "]]";
}

PointP1::PointP1(const Rational& p, const Rational& q) {
  if (p.is_zero() && q.is_zero()) throw Error(ErrorKind::ZeroVector, "[0 : 0] is not a point");
  if (q.is_zero()) {
    p_ = Rational(1);
    q_ = Rational(0);
  } else {
    p_ = p / q;
    q_ = Rational(1);
  }
}

const Rational& PointP1::coordinate() const {
  if (!is_affine()) throw Error(ErrorKind::BasePointAtInfinity, "point at infinity has no chart coordinate");
  return p_;
}

std::string PointP1::to_string() const { return "[" + p_.to_string() + " : " + q_.to_string() + "]"; }

// ---- chart representatives ----

Poly dehomogenize(const BinaryForm& f) { return Poly(f.coeffs()); }

BinaryForm homogenize(const Poly& p, int n) {
  if (p.degree() > n) {
    throw Error(ErrorKind::DegreeTooLarge,
                "polynomial of degree " + std::to_string(p.degree()) + " does not fit in S^" + std::to_string(n));
  }
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= p.degree(); ++i) c[static_cast<std::size_t>(i)] = p.coeff(i);
  return BinaryForm(n, std::move(c));
}

namespace {

// sum p_i (az+b)^i (cz+d)^(deg-i): the numerator of p(M z) over (cz+d)^deg.
Poly homogeneous_substitution(const Poly& p, int deg, const Mobius& m) {
  const Poly top = Poly::linear(m.a(), m.b());
  const Poly bottom = m.factor();
  Poly result;
  Poly top_pow(1);
  for (int i = 0; i <= p.degree(); ++i) {
    if (!p.coeff(i).is_zero()) result += top_pow * bottom.pow(static_cast<unsigned>(deg - i)) * p.coeff(i);
    top_pow *= top;
  }
  return result;
}

}  // namespace

RatFunc weight_pullback(const Mobius& m, const RatFunc& f, int k) {
  if (f.is_zero()) return f;
  const int dn = f.num().degree();
  const int dd = f.den().degree();
  Poly num = homogeneous_substitution(f.num(), dn, m);
  Poly den = homogeneous_substitution(f.den(), dd, m);
  const int e = k + dd - dn;
  if (e >= 0) {
    num *= m.factor().pow(static_cast<unsigned>(e));
  } else {
    den *= m.factor().pow(static_cast<unsigned>(-e));
  }
  return RatFunc(std::move(num), std::move(den));
}

RatFunc compose_mobius(const RatFunc& f, const Mobius& m) { return weight_pullback(m, f, 0); }

BinaryForm sl2_act_form(const Mobius& m, const BinaryForm& f) {
  const int n = f.degree();
  const BinaryForm x_image = BinaryForm::linear(Vec2{m.a(), m.b()});
  const BinaryForm y_image = BinaryForm::linear(Vec2{m.c(), m.d()});
  BinaryForm result(n);
  for (int i = 0; i <= n; ++i) {
    if (f.coeff(i).is_zero()) continue;
    BinaryForm term(0, {f.coeff(i)});
    for (int t = 0; t < i; ++t) term = term * x_image;
    for (int t = i; t < n; ++t) term = term * y_image;
    result = result + term;
  }
  return result;
}

std::vector<Rational> as_vector(const BinaryForm& f) { return f.coeffs(); }

Matrix<Rational> form_matrix(int src_degree, int dst_degree,
                             const std::function<BinaryForm(const BinaryForm&)>& map) {
  Matrix<Rational> m(static_cast<std::size_t>(dst_degree) + 1, static_cast<std::size_t>(src_degree) + 1);
  for (int i = 0; i <= src_degree; ++i) {
    const BinaryForm image = map(BinaryForm::monomial(src_degree, i));
    if (image.degree() != dst_degree) throw Error(ErrorKind::DimensionMismatch, "form map changed degree");
    m.set_column(static_cast<std::size_t>(i), image.coeffs());
  }
  return m;
}

Matrix<Rational> form_action_matrix(const Mobius& m, int n) {
  return form_matrix(n, n, [&](const BinaryForm& f) { return sl2_act_form(m, f); });
}

Matrix<Rational> sym_power_matrix(const Matrix<Rational>& a, int n) {
  if (a.rows() != 2 || a.cols() != 2) throw Error(ErrorKind::DimensionMismatch, "expected a 2x2 matrix");
  // Column 0 is the image of Y, column 1 the image of X.
  const BinaryForm y_image(1, a.column(0));
  const BinaryForm x_image(1, a.column(1));
  Matrix<Rational> s(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    BinaryForm col(0, {Rational(1)});
    for (int t = 0; t < i; ++t) col = col * x_image;
    for (int t = i; t < n; ++t) col = col * y_image;
    s.set_column(static_cast<std::size_t>(i), col.coeffs());
  }
  return s;
}

BinaryForm mult_v(const BinaryForm& f, const Vec2& v, int j) {
  if (v.is_zero()) throw Error(ErrorKind::ZeroVector, "multiplication by the zero vector");
  if (j < 0) throw Error(ErrorKind::BadOrder, "negative multiplicity");
  BinaryForm r = f;
  const BinaryForm lin = BinaryForm::linear(v);
  for (int t = 0; t < j; ++t) r = r * lin;
  return r;
}

namespace {

BinaryForm directional_derivative(const BinaryForm& f, const Covec2& w) {
  const int n = f.degree();
  if (n == 0) return BinaryForm(0);
  BinaryForm r(n - 1);
  std::vector<Rational> c(static_cast<std::size_t>(n));
  for (int i = 0; i <= n; ++i) {
    const Rational& a = f.coeff(i);
    if (a.is_zero()) continue;
    if (i > 0) c[static_cast<std::size_t>(i - 1)] += w.x * a * Rational(i);          // d/dX
    if (i < n) c[static_cast<std::size_t>(i)] += w.y * a * Rational(n - i);           // d/dY
  }
  return BinaryForm(n - 1, std::move(c));
}

}  // namespace

BinaryForm contract_omega(const BinaryForm& f, const Covec2& w, int j) {
  const int n = f.degree();
  if (j < 0) throw Error(ErrorKind::BadOrder, "negative contraction count");
  if (j > n) {
    throw Error(ErrorKind::ContractionOverflow,
                "cannot contract " + std::to_string(j) + " slots of a degree " + std::to_string(n) + " form");
  }
  BinaryForm r = f;
  for (int t = 0; t < j; ++t) r = directional_derivative(r, w);
  return r * (factorial(static_cast<unsigned>(n - j)) / factorial(static_cast<unsigned>(n)));
}

VectorField s2_to_sl2(const BinaryForm& q) {
  if (q.degree() != 2) throw Error(ErrorKind::DimensionMismatch, "s2_to_sl2 expects a quadratic form");
  return VectorField(dehomogenize(q));
}

BinaryForm sl2_to_s2(const VectorField& v) { return homogenize(v.coefficient(), 2); }

}  // namespace jetline
