#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "jetline/rational.hpp"

namespace jetline {

/// Dense univariate polynomial over the rationals. Trailing zero
/// coefficients are always trimmed, so the zero polynomial has no
/// coefficients and degree() == kZeroDegree.
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(const Rational& constant) : c_{constant} { trim(); }  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  Poly(I constant) : Poly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

  static Poly monomial(const Rational& coeff, int degree);
  static Poly z() { return monomial(Rational(1), 1); }
  /// Linear polynomial a*z + b.
  static Poly linear(const Rational& a, const Rational& b) { return Poly({b, a}); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  /// Coefficient of z^i, zero beyond the degree.
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& x) const;
  Poly derivative() const;
  Poly pow(unsigned e) const;
  Poly monic() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly&, const Poly&) = default;

  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Euclidean division; throws ZeroDenominator for a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd (zero when both inputs are zero).
Poly gcd(Poly a, Poly b);

/// Divided Taylor coefficients a_0..a_m of p at c, i.e. p(z) = sum a_j (z-c)^j.
std::vector<Rational> taylor_coeffs(const Poly& p, const Rational& c, int m);

/// Expands sum a_j (z-c)^j back into the monomial basis.
Poly from_taylor(const std::vector<Rational>& a, const Rational& c);

}  // namespace jetline
