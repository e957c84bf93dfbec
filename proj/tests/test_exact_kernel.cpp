#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jetline/errors.hpp"
#include "jetline/matrix.hpp"
#include "jetline/poly.hpp"
#include "jetline/random.hpp"
#include "jetline/ratfunc.hpp"
#include "jetline/series.hpp"
#include "oracles.hpp"

using namespace jetline;
using V = std::vector<Rational>;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::UnknownSuite;
}

}  // namespace

TEST_CASE("rationals are kept in lowest terms with a positive denominator") {
  CHECK(Rational(4, -6) == Rational(-2, 3));
  CHECK(Rational(4, -6).denominator_string() == "3");
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK(Rational::parse("-7/21") == Rational(-1, 3));
  CHECK(Rational::from_strings("123456789012345678901234567890", "10").numerator_string() ==
        "12345678901234567890123456789");
  CHECK(kind_of([] { (void)Rational(1, 0); }) == ErrorKind::ZeroDenominator);
  CHECK(kind_of([] { (void)(Rational(1) / Rational(0)); }) == ErrorKind::ZeroDenominator);
}

TEST_CASE("factorial and binomial agree with the integer oracle") {
  for (unsigned n = 0; n <= 25; ++n) {
    CHECK(factorial(n) == oracle::ratio(oracle::fact(n), 1));
    for (long k = 0; k <= static_cast<long>(n); ++k) {
      CHECK(binomial(n, k) == oracle::ratio(oracle::choose(n, k), 1));
    }
  }
}

TEST_CASE("taylor_coeffs examples") {
  const Poly z2 = Poly::monomial(Rational(1), 2);
  CHECK(taylor_coeffs(z2, Rational(0), 3) == V{0, 0, 1, 0});
  CHECK(taylor_coeffs(z2, Rational(1), 2) == V{1, 2, 1});
  const Poly p = Poly::monomial(Rational(1), 3) - Poly::z();
  CHECK(taylor_coeffs(p, Rational(2), 3) == V{6, 11, 6, 1});
}

TEST_CASE("ratfunc_taylor examples") {
  const RatFunc geometric(Poly{1}, Poly{1, -1});
  CHECK(ratfunc_taylor(geometric, Rational(0), 3) == V{1, 1, 1, 1});
  const RatFunc inv_z(Poly{1}, Poly::z());
  CHECK(kind_of([&] { (void)ratfunc_taylor(inv_z, Rational(0), 1); }) == ErrorKind::PoleAtExpansionPoint);
  const RatFunc r(Poly::z(), Poly{1, 1});
  CHECK(ratfunc_taylor(r, Rational(1), 2) == V{Rational(1, 2), Rational(1, 4), Rational(-1, 8)});
}

TEST_CASE("ratfunc_canonicalize examples") {
  const RatFunc a = ratfunc_canonicalize(Poly{-1, 0, 1}, Poly{-1, 1});
  CHECK(a == RatFunc(Poly{1, 1}));
  CHECK(a.den() == Poly{1});
  CHECK(ratfunc_canonicalize(Poly{0, 2}, Poly{2}) == RatFunc(Poly::z()));
  const RatFunc c = ratfunc_canonicalize(Poly{0, 1, 1}, Poly{0, 3});
  CHECK(c.num() == Poly{Rational(1, 3), Rational(1, 3)});
  CHECK(c.den() == Poly{1});
  CHECK(kind_of([] { (void)ratfunc_canonicalize(Poly{1}, Poly{}); }) == ErrorKind::ZeroDenominator);
}

TEST_CASE("taylor expansion round-trips and matches the binomial oracle") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly p = rng.poly(7);
    const Rational c = rng.rational();
    const int m = std::max(p.degree(), 0) + static_cast<int>(rng.uniform(0, 3));
    const V a = taylor_coeffs(p, c, m);
    CHECK(a == oracle::taylor(p, c, m));
    CHECK(from_taylor(a, c) == p);
    CHECK(ratfunc_taylor(RatFunc(p), c, m) == a);
  }
}

TEST_CASE("rational functions form a field under canonical representatives") {
  Rng rng(5);
  auto random_ratfunc = [&] {
    Poly den = rng.poly(3);
    if (den.is_zero()) den = Poly{1};
    return RatFunc(rng.poly(3), den);
  };
  for (int trial = 0; trial < 100; ++trial) {
    const RatFunc a = random_ratfunc();
    const RatFunc b = random_ratfunc();
    const RatFunc c = random_ratfunc();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == RatFunc(Rational(0)));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    // canonical form: monic denominator, coprime parts
    CHECK(a.den().leading() == Rational(1));
    CHECK(gcd(a.num(), a.den()).degree() <= 0);
  }
}

TEST_CASE("polynomial division and derivative") {
  const Poly a{-1, 0, 0, 1};  // z^3 - 1
  const Poly b{-1, 1};        // z - 1
  const auto [q, r] = divmod(a, b);
  CHECK(q == Poly{1, 1, 1});
  CHECK(r.is_zero());
  CHECK(a.derivative() == Poly{0, 0, 3});
  CHECK(oracle::nth_derivative(a, 1) == a.derivative());
  CHECK(Poly::linear(Rational(2), Rational(3)).pow(2) == Poly{9, 12, 4});
}

TEST_CASE("truncated series division inverts multiplication") {
  const Series<Rational> one_minus_w({Rational(1), Rational(-1)}, 4);
  const Series<Rational> g = Series<Rational>::constant(Rational(1), 4) / one_minus_w;
  for (int j = 0; j <= 4; ++j) CHECK(g[j] == Rational(1));
  CHECK((g * one_minus_w)[0] == Rational(1));
  for (int j = 1; j <= 4; ++j) CHECK((g * one_minus_w)[j] == Rational(0));
}

TEST_CASE("exact matrices: inverse, null space") {
  Matrix<Rational> m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 3;
  m(1, 1) = 4;
  const auto inv = m.inverse();
  REQUIRE(inv.has_value());
  CHECK(m * *inv == Matrix<Rational>::identity(2));
  Matrix<Rational> s(2, 3);
  s(0, 0) = 1;
  s(0, 1) = 1;
  s(1, 2) = 1;
  const auto ns = s.null_space();
  REQUIRE(ns.size() == 1);
  for (const auto& v : ns) {
    const auto image = s.apply(v);
    for (const auto& x : image) CHECK(x.is_zero());
  }
}
