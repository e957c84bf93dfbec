#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jetline/errors.hpp"
#include "jetline/lie_casimir.hpp"
#include "jetline/random.hpp"
#include "oracles.hpp"

using namespace jetline;

namespace {

RatFunc zpow(int m) { return RatFunc(Poly::monomial(Rational(1), m)); }

Matrix<Rational> random_symmetric(Rng& rng) {
  Matrix<Rational> s(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i; j < 3; ++j) {
      s(i, j) = rng.rational();
      s(j, i) = s(i, j);
    }
  }
  return s;
}

}  // namespace

TEST_CASE("bracket examples") {
  const VectorField e = VectorField::e(), h = VectorField::h(), f = VectorField::f();
  CHECK(bracket(h, e) == VectorField(Poly{2}));
  CHECK(bracket(h, f) == VectorField(Poly{0, 0, 2}));
  CHECK(bracket(e, e) == VectorField(Poly{}));
  // sl2 relations [h, e] = 2e, [h, f] = -2f, [e, f] = h
  CHECK(bracket(h, e) == VectorField(e.coefficient() * Rational(2)));
  CHECK(bracket(h, f) == VectorField(f.coefficient() * Rational(-2)));
  CHECK(bracket(e, f) == h);
}

TEST_CASE("bracket is antisymmetric and satisfies Jacobi") {
  Rng rng(51);
  for (int trial = 0; trial < 30; ++trial) {
    const VectorField a(rng.poly(2)), b(rng.poly(2)), c(rng.poly(2));
    CHECK(bracket(a, b) == VectorField(bracket(b, a).coefficient() * Rational(-1)));
    const Poly jac = bracket(a, bracket(b, c)).coefficient() + bracket(b, bracket(c, a)).coefficient() +
                     bracket(c, bracket(a, b)).coefficient();
    CHECK(jac.is_zero());
  }
}

TEST_CASE("lie_derivative examples") {
  Rng rng(52);
  const VectorField q(rng.poly(2));
  const RatFunc f(rng.poly(4), Poly{1, 0, 1});
  CHECK(lie_derivative(q, f, 0) == RatFunc(q.coefficient()) * f.derivative());
  const Poly g = rng.poly(2);
  CHECK(lie_derivative(q, RatFunc(g), 2) == RatFunc(bracket(q, VectorField(g)).coefficient()));
  for (int m = 0; m <= 6; ++m) {
    for (int k = -3; k <= 5; ++k) {
      CHECK(lie_derivative(VectorField(Poly::z()), zpow(m), k) == zpow(m) * RatFunc(Rational(2 * m - k, 2)));
    }
  }
}

TEST_CASE("lie derivatives represent the bracket at every weight") {
  Rng rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    const VectorField a(rng.poly(2)), b(rng.poly(2));
    const int k = static_cast<int>(rng.uniform(-4, 6));
    const RatFunc f(rng.poly(5));
    const RatFunc lhs = lie_derivative(a, lie_derivative(b, f, k), k) - lie_derivative(b, lie_derivative(a, f, k), k);
    CHECK(lhs == lie_derivative(bracket(a, b), f, k));
  }
}

TEST_CASE("second_order_lie examples") {
  const SymTensor2 c = casimir_tensor();
  Rng rng(54);
  const RatFunc f(rng.poly(5), Poly{1, 2, 1});
  CHECK(second_order_lie(c, f, 0).is_zero());
  for (int m = 0; m <= 8; ++m) CHECK(second_order_lie(c, zpow(m), 2) == zpow(m) * RatFunc(Rational(4)));
}

TEST_CASE("casimir_scalar examples and the hand expansion") {
  CHECK(casimir_scalar(0) == Rational(0));
  CHECK(casimir_scalar(2) == Rational(4));
  CHECK(casimir_scalar(1) == Rational(3, 2));
  Rng rng(55);
  for (int k = -4; k <= 8; ++k) {
    CHECK(casimir_scalar(k) == Rational(k * (k + 2), 2));
    CHECK(casimir_scalar(k) / casimir_scalar(2) == Rational(k * (k + 2), 8));
    const Poly p = rng.poly(8);
    CHECK(second_order_lie(casimir_tensor(), RatFunc(p), k) == RatFunc(oracle::casimir_by_hand(p, k)));
  }
}

TEST_CASE("the Casimir does not depend on the decomposition") {
  Rng rng(56);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix<Rational> s = random_symmetric(rng);
    const SymTensor2 a = polarization_decomposition(s);
    const SymTensor2 b = diagonal_decomposition(s);
    CHECK(a == b);
    CHECK(a.matrix() == s);
    const int k = static_cast<int>(rng.uniform(-3, 6));
    for (int m = 0; m <= 5; ++m) CHECK(second_order_lie(a, zpow(m), k) == second_order_lie(b, zpow(m), k));
  }
}

TEST_CASE("the Casimir tensor is invariant") {
  const SymTensor2 c = casimir_tensor();
  for (const VectorField& q : {VectorField::e(), VectorField::h(), VectorField::f()}) {
    CHECK(adjoint_action(q, c).is_zero());
  }
  Rng rng(57);
  for (int trial = 0; trial < 10; ++trial) CHECK(transport_tensor(rng.mobius(), c) == c);
}

TEST_CASE("the Casimir from jets equals the Casimir of vector fields") {
  CHECK(casimir_from_jets() == casimir_tensor().matrix());
  const Matrix<Rational> k = killing_casimir({VectorField::e(), VectorField::h(), VectorField::f()}, Rational(4));
  CHECK(k == casimir_tensor().matrix());
}

TEST_CASE("the contraction bracket is a fixed multiple of the vector-field bracket") {
  const Rational s = contraction_bracket_scale();
  CHECK(!s.is_zero());
  Rng rng(58);
  for (int trial = 0; trial < 10; ++trial) {
    const BinaryForm q1 = rng.form(2), q2 = rng.form(2);
    const Matrix<Rational> a = contraction_endomorphism(q1), b = contraction_endomorphism(q2);
    const Matrix<Rational> comm = a * b - b * a;
    const BinaryForm br = sl2_to_s2(bracket(s2_to_sl2(q1), s2_to_sl2(q2)));
    CHECK(comm == contraction_endomorphism(br).scaled(s));
  }
}

TEST_CASE("transporting fields respects the bracket") {
  Rng rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    const Mobius m = rng.mobius();
    const VectorField a(rng.poly(2)), b(rng.poly(2));
    CHECK(transport_field(m, bracket(a, b)) == bracket(transport_field(m, a), transport_field(m, b)));
  }
}
