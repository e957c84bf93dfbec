#include "jetline/ratfunc.hpp"

#include "jetline/errors.hpp"
#include "jetline/series.hpp"

namespace jetline {

RatFunc ratfunc_canonicalize(const Poly& num, const Poly& den) { return RatFunc(num, den); }

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero()) throw Error(ErrorKind::ZeroDenominator, "rational function with zero denominator");
  if (num.is_zero()) {
    num_ = Poly();
    den_ = Poly(1);
    return;
  }
  if (den.degree() > 0) {
    const Poly g = gcd(num, den);
    if (g.degree() > 0) {
      num = divmod(num, g).first;
      den = divmod(den, g).first;
    }
  }
  const Rational lead = den.leading();
  num_ = num * (Rational(1) / lead);
  den_ = den.monic();
}

Rational RatFunc::operator()(const Rational& x) const {
  const Rational d = den_(x);
  if (d.is_zero()) throw Error(ErrorKind::PoleAtExpansionPoint, "pole at z = " + x.to_string());
  return num_(x) / d;
}

RatFunc RatFunc::derivative() const {
  if (is_polynomial()) return RatFunc(num_.derivative());
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw Error(ErrorKind::ZeroDenominator, "zero to a negative power");
    // Coprimality is preserved under powers; only the monic normalization moves.
    return RatFunc(den_.pow(static_cast<unsigned>(-e)), num_.pow(static_cast<unsigned>(-e)));
  }
  return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), Canonical{});
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    *this = RatFunc(num_ + o.num_, den_);
  } else {
    *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_polynomial() && o.is_polynomial()) {
    num_ *= o.num_;
    return *this;
  }
  *this = RatFunc(num_ * o.num_, den_ * o.den_);
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw Error(ErrorKind::ZeroDenominator, "division by the zero rational function");
  *this = RatFunc(num_ * o.den_, den_ * o.num_);
  return *this;
}

std::string RatFunc::to_string(const std::string& var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

std::vector<Rational> ratfunc_taylor(const RatFunc& r, const Rational& c, int m) {
  if (r.den()(c).is_zero()) {
    throw Error(ErrorKind::PoleAtExpansionPoint, "denominator vanishes at z = " + c.to_string());
  }
  Series<Rational> num(taylor_coeffs(r.num(), c, m), m);
  Series<Rational> den(taylor_coeffs(r.den(), c, m), m);
  return (num / den).coeffs();
}

}  // namespace jetline
