#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jetline/errors.hpp"
#include "jetline/lie_casimir.hpp"
#include "jetline/proj_line.hpp"
#include "jetline/random.hpp"

using namespace jetline;

namespace {

const Mobius kInv = Mobius::inversion();
const Mobius kT = Mobius::translation(Rational(1));

BinaryForm form(int n, std::vector<Rational> c) { return BinaryForm(n, std::move(c)); }
BinaryForm X() { return BinaryForm::monomial(1, 1); }
BinaryForm Y() { return BinaryForm::monomial(1, 0); }

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

TEST_CASE("sl2_act_form examples") {
  Rng rng(3);
  const BinaryForm f = rng.form(4);
  CHECK(sl2_act_form(Mobius::identity(), f) == f);
  CHECK(sl2_act_form(kT, X()) == X() + Y());
  CHECK(sl2_act_form(kInv, BinaryForm::monomial(2, 2)) == BinaryForm::monomial(2, 0));
}

TEST_CASE("dehomogenize and homogenize examples") {
  CHECK(dehomogenize(form(2, {0, 2, 1})) == Poly{0, 2, 1});
  CHECK(homogenize(Poly{1, 1}, 3) == form(3, {1, 1, 0, 0}));
  CHECK(kind_of([] { (void)homogenize(Poly{0, 0, 1}, 1); }) == ErrorKind::DegreeTooLarge);
}

TEST_CASE("weight_pullback examples") {
  Rng rng(4);
  const RatFunc f(rng.poly(4), Poly{1, 0, 1});
  CHECK(weight_pullback(Mobius::identity(), f, 3) == f);
  const Rational b(5, 2);
  CHECK(weight_pullback(Mobius::translation(b), f, -7) == compose_mobius(f, Mobius::translation(b)));
  CHECK(weight_pullback(Mobius::translation(b), RatFunc(Poly{0, 0, 1}), 4) ==
        RatFunc(Poly::linear(Rational(1), b).pow(2)));
  CHECK(weight_pullback(kInv, RatFunc(Rational(1)), 2) == RatFunc(Poly{0, 0, 1}));
}

TEST_CASE("mult_v examples") {
  CHECK(mult_v(Y(), Vec2{1, 0}, 1) == BinaryForm::monomial(2, 1));
  CHECK(mult_v(form(0, {1}), Vec2{1, 0}, 2) == BinaryForm::monomial(2, 2));
  CHECK(mult_v(X() + Y(), Vec2{0, 1}, 1) == form(2, {1, 1, 0}));
  CHECK(kind_of([] { (void)mult_v(Y(), Vec2{0, 0}, 1); }) == ErrorKind::ZeroVector);
}

TEST_CASE("contract_omega examples") {
  const Covec2 xstar{1, 0};
  CHECK(contract_omega(BinaryForm::monomial(2, 2), xstar, 2) == form(0, {1}));
  CHECK(contract_omega(BinaryForm::monomial(2, 0), xstar, 2) == form(0, {0}));
  CHECK(contract_omega(BinaryForm::monomial(2, 1), xstar, 1) == Y() * Rational(1, 2));
  CHECK(kind_of([&] { (void)contract_omega(X(), xstar, 2); }) == ErrorKind::ContractionOverflow);
}

TEST_CASE("symplectic_dual examples") {
  const Covec2 a = symplectic_dual(Vec2{1, 0});
  CHECK(a(Vec2{1, 0}) == Rational(0));
  CHECK(a(Vec2{0, 1}) == Rational(1));
  CHECK(symplectic_dual(Vec2{0, 1})(Vec2{1, 0}) == Rational(-1));
  CHECK(symplectic_dual(Vec2{2, 3})(Vec2{2, 3}) == Rational(0));
  CHECK(symplectic_vector(symplectic_dual(Vec2{2, 3})) == Vec2{2, 3});
}

TEST_CASE("s2_to_sl2 examples") {
  CHECK(s2_to_sl2(BinaryForm::monomial(2, 0)) == VectorField::e());
  CHECK(s2_to_sl2(BinaryForm::monomial(2, 1)) == VectorField(Poly::z()));
  CHECK(s2_to_sl2(BinaryForm(2)) == VectorField(Poly{}));
  const BinaryForm q = form(2, {3, -1, 2});
  CHECK(sl2_to_s2(s2_to_sl2(q)) == q);
}

TEST_CASE("the form action matches the weighted pullback of chart representatives") {
  Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(rng.uniform(0, 6));
    const Mobius m = rng.mobius();
    const BinaryForm f = rng.form(n);
    CHECK(RatFunc(dehomogenize(sl2_act_form(m, f))) == weight_pullback(m, RatFunc(dehomogenize(f)), n));
  }
}

TEST_CASE("group law: both actions are right actions") {
  Rng rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    const Mobius a = rng.mobius();
    const Mobius b = rng.mobius();
    const int n = static_cast<int>(rng.uniform(0, 5));
    const BinaryForm f = rng.form(n);
    CHECK(sl2_act_form(b, sl2_act_form(a, f)) == sl2_act_form(a * b, f));
    const int k = static_cast<int>(rng.uniform(-4, 6));
    const RatFunc g(rng.poly(3), Poly{2, 0, 1});
    CHECK(weight_pullback(b, weight_pullback(a, g, k), k) == weight_pullback(a * b, g, k));
    CHECK(form_action_matrix(a * b, n) == form_action_matrix(b, n) * form_action_matrix(a, n));
  }
}

TEST_CASE("theta is alternating and preserved by SL(2)") {
  Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const Vec2 u{rng.rational(), rng.rational()};
    const Vec2 w{rng.rational(), rng.rational()};
    CHECK(theta(u, u) == Rational(0));
    CHECK(theta(u, w) == -theta(w, u));
    const Mobius m = rng.mobius();
    const Vec2 mu{m.a() * u.x + m.b() * u.y, m.c() * u.x + m.d() * u.y};
    const Vec2 mw{m.a() * w.x + m.b() * w.y, m.c() * w.x + m.d() * w.y};
    CHECK(theta(mu, mw) == theta(u, w));
  }
}

TEST_CASE("contraction composes and kills the contracting direction") {
  Rng rng(24);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 6));
    const BinaryForm f = rng.form(n);
    const Vec2 v{rng.nonzero_rational(), rng.rational()};
    const Covec2 w = symplectic_dual(v);
    CHECK(contract_omega(contract_omega(f, w, 1), w, 1) == contract_omega(f, w, 2));
    // w(v) = 0, so contracting v^j F only differentiates F; the divided-power
    // normalizations of the two sides differ by n!^2 / ((n+j)! (n-j)!)
    const int j = static_cast<int>(rng.uniform(1, 2));
    const Rational scale = factorial(n) * factorial(n) / (factorial(n + j) * factorial(n - j));
    CHECK(contract_omega(mult_v(f, v, j), w, j) == mult_v(contract_omega(f, w, j), v, j) * scale);
    CHECK(contract_omega(mult_v(BinaryForm(0, {1}), v, n), w, 1).is_zero());
  }
}

TEST_CASE("points and Mobius maps") {
  CHECK(PointP1(Rational(2), Rational(4)) == PointP1::affine(Rational(1, 2)));
  CHECK(PointP1(Rational(3), Rational(0)) == PointP1::infinity());
  CHECK(kind_of([] { (void)PointP1(Rational(0), Rational(0)); }) == ErrorKind::ZeroVector);
  CHECK(kind_of([] { (void)PointP1::infinity().coordinate(); }) == ErrorKind::BasePointAtInfinity);
  CHECK(kind_of([] { (void)Mobius(1, 1, 1, 1); }) == ErrorKind::NotUnimodular);
  CHECK(kInv(PointP1::affine(Rational(0))) == PointP1::infinity());
  CHECK(kT(PointP1::infinity()) == PointP1::infinity());
  Rng rng(25);
  const Mobius m = rng.mobius();
  CHECK(m * m.inverse() == Mobius::identity());
  const PointP1 p = rng.affine_point();
  CHECK(m.inverse()(m(p)) == p);
}

TEST_CASE("sym_power_matrix agrees with the form action") {
  Rng rng(26);
  for (int trial = 0; trial < 20; ++trial) {
    const Mobius m = rng.mobius();
    const int n = static_cast<int>(rng.uniform(0, 5));
    CHECK(sym_power_matrix(form_action_matrix(m, 1), n) == form_action_matrix(m, n));
  }
}
