#pragma once

// Independent reference computations used by the tests. None of these call
// into the library code they check; they use plain GMP integers and direct
// formulas.

#include <gmpxx.h>

#include <vector>

#include "jetline/poly.hpp"
#include "jetline/rational.hpp"

namespace oracle {

inline mpz_class fact(long n) {
  mpz_class r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

inline jetline::Rational ratio(const mpz_class& num, const mpz_class& den) {
  return jetline::Rational(mpq_class(num, den));
}

/// (2n-i)! / (i! (n-i)! (n-i-1)!).
inline jetline::Rational cmz(long n, long i) {
  return ratio(fact(2 * n - i), fact(i) * fact(n - i) * fact(n - i - 1));
}

inline mpz_class choose(long n, long k) {
  if (k < 0 || k > n) return 0;
  return fact(n) / (fact(k) * fact(n - k));
}

/// k-th derivative of a polynomial by the power rule, coefficient by coefficient.
inline jetline::Poly nth_derivative(const jetline::Poly& p, int k) {
  std::vector<jetline::Rational> out;
  for (int i = k; i <= p.degree(); ++i) {
    mpz_class falling = 1;
    for (int t = 0; t < k; ++t) falling *= (i - t);
    out.push_back(p.coeff(i) * jetline::Rational(mpq_class(falling)));
  }
  return jetline::Poly(out);
}

/// Taylor coefficients at c by the binomial theorem: a_j = sum_i p_i C(i, j) c^(i-j).
inline std::vector<jetline::Rational> taylor(const jetline::Poly& p, const jetline::Rational& c, int m) {
  std::vector<jetline::Rational> a(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) {
    for (int i = j; i <= p.degree(); ++i) {
      a[static_cast<std::size_t>(j)] += p.coeff(i) * jetline::Rational(mpq_class(choose(i, j))) * c.pow(i - j);
    }
  }
  return a;
}

/// mu_k = k(k+2)/2 from expanding the Casimir by hand:
/// (EF + FE) f = -2 z^2 f'' + 2(k-1) z f' + k f and (1/2) H H f =
/// 2 z^2 f'' + (2 - 2k) z f' + (k^2/2) f.
inline jetline::Poly casimir_by_hand(const jetline::Poly& f, int k) {
  using jetline::Poly;
  using jetline::Rational;
  const Poly z = Poly::z();
  const Poly d1 = nth_derivative(f, 1);
  const Poly d2 = nth_derivative(f, 2);
  const Poly ef = Rational(-2) * (z * z * d2) + Rational(2 * (k - 1)) * (z * d1) + Rational(k) * f;
  const Poly hh = Rational(2) * (z * z * d2) + Rational(2 - 2 * k) * (z * d1) + Rational(k * k, 2) * f;
  return ef + hh;
}

}  // namespace oracle
