#pragma once

#include <string>
#include <vector>

#include "jetline/poly.hpp"

namespace jetline {

/// Rational function num/den in canonical form: coprime, monic denominator.
/// Two RatFunc values are equal as functions iff they compare equal.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(Poly num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c), den_(1) {}      // NOLINT(google-explicit-constructor)
  template <std::integral I>
  RatFunc(I c) : RatFunc(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  /// Canonicalizes; throws ZeroDenominator if den is the zero polynomial.
  RatFunc(Poly num, Poly den);

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }
  bool is_constant() const noexcept { return is_polynomial() && num_.is_constant(); }
  Rational constant_value() const { return num_.coeff(0); }

  /// Throws PoleAtExpansionPoint where the denominator vanishes.
  Rational operator()(const Rational& x) const;
  RatFunc derivative() const;
  RatFunc pow(long e) const;

  RatFunc operator-() const { return RatFunc(-num_, den_, Canonical{}); }
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  std::string to_string(const std::string& var = "z") const;

 private:
  struct Canonical {};
  RatFunc(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

/// Reduces an arbitrary (num, den) pair to canonical form.
RatFunc ratfunc_canonicalize(const Poly& num, const Poly& den);

/// Divided Taylor coefficients of r at c up to order m by exact series
/// division. Throws PoleAtExpansionPoint if the denominator vanishes at c.
std::vector<Rational> ratfunc_taylor(const RatFunc& r, const Rational& c, int m);

}  // namespace jetline
