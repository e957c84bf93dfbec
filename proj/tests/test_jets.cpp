#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jetline/errors.hpp"
#include "jetline/jets.hpp"
#include "jetline/random.hpp"
#include "oracles.hpp"

using namespace jetline;
using V = std::vector<Rational>;

namespace {

PointP1 at(const Rational& z) { return PointP1::affine(z); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::UnknownSuite;
}

Jet random_jet(Rng& rng, int weight, int order) {
  V c;
  for (int i = 0; i <= order; ++i) c.push_back(rng.rational());
  return Jet(weight, order, rng.affine_point(), c);
}

}  // namespace

TEST_CASE("jet_of_local examples") {
  CHECK(jet_of_local(RatFunc(Poly::z()), 1, at(0), 1).coeffs() == V{0, 1});
  CHECK(jet_of_local(RatFunc(Poly{1}, Poly{1, -1}), 0, at(0), 2).coeffs() == V{1, 1, 1});
  CHECK(kind_of([] { (void)jet_of_local(RatFunc(Poly{1}, Poly::z()), 0, at(0), 0); }) ==
        ErrorKind::PoleAtBasePoint);
}

TEST_CASE("eval_global examples") {
  CHECK(eval_global(BinaryForm::monomial(1, 1), at(0), 1).coeffs() == V{0, 1});
  CHECK(eval_global(BinaryForm::monomial(2, 0), at(5), 2).coeffs() == V{1, 0, 0});
  CHECK(eval_global(BinaryForm::monomial(2, 2), at(1), 2).coeffs() == V{1, 2, 1});
  CHECK(eval_global(BinaryForm::monomial(2, 2), at(1), 2).weight() == 2);
}

TEST_CASE("reconstruct examples") {
  CHECK(reconstruct(Jet(1, 1, at(0), {1, 0})) == BinaryForm::monomial(1, 0));
  CHECK(reconstruct(Jet(1, 1, at(0), {0, 1})) == BinaryForm::monomial(1, 1));
  CHECK(reconstruct(Jet(2, 2, at(1), {1, 2, 1})) == BinaryForm::monomial(2, 2));
  CHECK(kind_of([] { (void)reconstruct(Jet(2, 1, at(0), {1, 0})); }) == ErrorKind::OrderWeightMismatch);
}

TEST_CASE("split examples") {
  const Rational c0(3, 7), c1(-2);
  CHECK(split(Jet(1, 1, at(Rational(4)), {c0, c1}), 3).coeffs() == V{c0, c1, 0, 0});
  CHECK(split(Jet(2, 2, at(1), {1, 2, 1}), 3).coeffs() == V{1, 2, 1, 0});
  CHECK(split(Jet(0, 0, at(Rational(-2)), {c0}), 2).coeffs() == V{c0, 0, 0});
}

TEST_CASE("truncate and include_top examples") {
  const Jet j(3, 2, at(0), {1, 2, 3});
  CHECK(truncate(j, 1).coeffs() == V{1, 2});
  CHECK(truncate(j, 2) == j);
  CHECK(include_top(Rational(1), 5, 2, at(0)).coeffs() == V{0, 0, 1});
  CHECK(include_top(Rational(0), 5, 2, at(0)).is_zero());
  CHECK(kind_of([&] { (void)truncate(j, 3); }) == ErrorKind::BadOrder);
}

TEST_CASE("jet_transition examples") {
  Rng rng(7);
  const Jet j = random_jet(rng, 3, 4);
  CHECK(jet_transition(j, Mobius::identity()) == j);
  const Mobius inv = Mobius::inversion();
  const Jet jx = eval_global(BinaryForm::monomial(1, 1), at(1), 1);
  CHECK(jet_transition(jx, inv) == eval_global(sl2_act_form(inv, BinaryForm::monomial(1, 1)), at(-1), 1));
}

TEST_CASE("canonical splitting: truncate o split is the identity and eval = split o eval") {
  Rng rng(31);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = static_cast<int>(rng.uniform(0, 6));
    const int m = n + static_cast<int>(rng.uniform(0, 4));
    const Jet j = random_jet(rng, n, n);
    CHECK(truncate(split(j, m), n) == j);
    CHECK(split(j, m) == eval_global(reconstruct(j), j.base(), m));
    const BinaryForm f = rng.form(n);
    CHECK(reconstruct(eval_global(f, j.base(), n)) == f);
  }
}

TEST_CASE("evaluation, splitting and transitions are SL(2)-equivariant") {
  Rng rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(rng.uniform(0, 5));
    const int m = n + static_cast<int>(rng.uniform(0, 3));
    const Mobius g = rng.mobius();
    const Jet j = random_jet(rng, n, n);
    if (!g.inverse()(j.base()).is_affine()) continue;
    CHECK(jet_transition(split(j, m), g) == split(jet_transition(j, g), m));
    const BinaryForm f = rng.form(n);
    CHECK(jet_transition(eval_global(f, j.base(), m), g) ==
          eval_global(sl2_act_form(g, f), g.inverse()(j.base()), m));
  }
}

TEST_CASE("jet transitions compose and agree with pulling back local sections") {
  Rng rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = static_cast<int>(rng.uniform(-3, 5));
    const int m = static_cast<int>(rng.uniform(0, 4));
    const Mobius a = rng.mobius();
    const Mobius b = rng.mobius();
    const PointP1 p = rng.affine_point();
    const PointP1 q = a.inverse()(p);
    if (!q.is_affine() || !b.inverse()(q).is_affine()) continue;
    const RatFunc f(rng.poly(5), Poly{3, 0, 1});
    const Jet j = jet_of_local(f, k, p, m);
    CHECK(jet_transition(jet_transition(j, a), b) == jet_transition(j, a * b));
    CHECK(jet_transition(j, a) == jet_of_local(weight_pullback(a, f, k), k, q, m));
  }
}

TEST_CASE("the kernel of truncation is the image of the top inclusion") {
  Rng rng(34);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = static_cast<int>(rng.uniform(1, 6));
    const int k = static_cast<int>(rng.uniform(-2, 6));
    const PointP1 p = rng.affine_point();
    const Rational c = rng.rational();
    CHECK(truncate(include_top(c, k, m, p), m - 1).is_zero());
    V coeffs(static_cast<std::size_t>(m) + 1);
    coeffs.back() = c;
    const Jet j(k, m, p, coeffs);
    CHECK(truncate(j, m - 1).is_zero());
    CHECK(j == include_top(c, k, m, p));
  }
}

TEST_CASE("raw transition matrix has the closed binomial form") {
  // column s, row r: C(k - s, r - s) c^(r-s) (c q + d)^(k-r-s)
  Rng rng(35);
  for (int trial = 0; trial < 10; ++trial) {
    const Mobius g = rng.mobius();
    const int k = static_cast<int>(rng.uniform(-2, 5));
    const int order = static_cast<int>(rng.uniform(0, 4));
    const JetFrameMatrix raw = raw_transition_matrix(g, order, k);
    const RatFunc cq_d(g.factor());
    for (int r = 0; r <= order; ++r) {
      for (int s = 0; s <= order; ++s) {
        RatFunc expected(Rational(0));
        if (s <= r) {
          // generalized binomial, k - s may be negative
          Rational gb(1);
          for (int t = 0; t < r - s; ++t) gb = gb * Rational(k - s - t) / Rational(t + 1);
          expected = RatFunc(gb * g.c().pow(r - s)) * cq_d.pow(k - r - s);
        }
        CHECK(raw(static_cast<std::size_t>(r), static_cast<std::size_t>(s)) == expected);
      }
    }
  }
}
