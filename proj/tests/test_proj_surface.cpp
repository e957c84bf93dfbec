#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "jetline/atlas_io.hpp"
#include "jetline/errors.hpp"
#include "jetline/lie_casimir.hpp"
#include "jetline/proj_surface.hpp"
#include "jetline/random.hpp"

using namespace jetline;

namespace {

bool all_pass(const std::vector<CheckRecord>& cs) {
  return !cs.empty() && std::all_of(cs.begin(), cs.end(), [](const CheckRecord& c) { return c.pass; });
}

std::vector<CheckRecord> matching(const std::vector<CheckRecord>& cs, const std::string& fragment) {
  std::vector<CheckRecord> out;
  for (const auto& c : cs)
    if (c.id.find(fragment) != std::string::npos) out.push_back(c);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kData = JETLINE_DATA_DIR;

Atlas with_triple_product_minus_identity() {
  Atlas a = projline_atlas();
  a.name = "sign";
  a.transitions.push_back(Transition{"U1", "U0", {0, -1, 1, 0}});
  a.triples.push_back(Triple{"U0", "U1", "U0"});
  return a;
}

}  // namespace

TEST_CASE("validate_atlas examples") {
  const AtlasValidation line = validate_atlas(projline_atlas());
  CHECK(line.valid());
  CHECK(line.obstructions.empty());
  const Atlas scaling = scaling_atlas();
  CHECK(scaling.transitions.at(0).determinant() == Rational(1));
  CHECK(validate_atlas(scaling).valid());
  CHECK(validate_atlas(translation_atlas()).valid());

  const AtlasValidation sign = validate_atlas(with_triple_product_minus_identity());
  CHECK(!sign.valid());
  REQUIRE(sign.obstructions.size() == 1);
  CHECK(sign.obstructions[0].triple == Triple{"U0", "U1", "U0"});
}

TEST_CASE("validation flags unknown charts and bad determinants") {
  Atlas a = projline_atlas();
  a.transitions.push_back(Transition{"U0", "U9", {1, 0, 0, 1}});
  a.transitions.push_back(Transition{"U1", "U0", {2, 0, 0, 1}});
  const AtlasValidation v = validate_atlas(a);
  CHECK(!v.valid());
  CHECK(!all_pass(matching(v.checks, "U0->U9")));
  CHECK(!all_pass(matching(v.checks, "U1->U0/det")));
}

TEST_CASE("validation does not depend on declaration order") {
  Atlas a = with_triple_product_minus_identity();
  a.transitions.push_back(Transition{"U0", "U0", {1, 0, 0, 1}});
  a.triples.push_back(Triple{"U1", "U0", "U1"});
  const AtlasValidation ref = validate_atlas(a);
  std::mt19937 g(9);
  for (int trial = 0; trial < 6; ++trial) {
    Atlas b = a;
    std::shuffle(b.transitions.begin(), b.transitions.end(), g);
    std::shuffle(b.triples.begin(), b.triples.end(), g);
    std::shuffle(b.charts.begin(), b.charts.end(), g);
    const AtlasValidation v = validate_atlas(b);
    REQUIRE(v.checks.size() == ref.checks.size());
    for (std::size_t i = 0; i < v.checks.size(); ++i) {
      CHECK(v.checks[i].id == ref.checks[i].id);
      CHECK(v.checks[i].pass == ref.checks[i].pass);
    }
    CHECK(v.obstructions.size() == ref.obstructions.size());
  }
}

TEST_CASE("jet_frame_transition examples") {
  for (int n = 0; n <= 4; ++n) {
    const FrameTransition id = jet_frame_transition(Mobius::identity(), n, n);
    REQUIRE(id.flat.has_value());
    CHECK(id.flat_is_constant);
    CHECK(constant_part(*id.flat) == Matrix<Rational>::identity(static_cast<std::size_t>(n + 1)));
  }
  const Mobius inv = Mobius::inversion();
  const FrameTransition one = jet_frame_transition(inv, 1, 1);
  REQUIRE(one.flat.has_value());
  CHECK(one.flat_is_constant);
  CHECK(!is_constant(one.raw));
  CHECK(constant_part(*one.flat) == form_action_matrix(inv, 1));
  Rng rng(61);
  const Mobius t = rng.mobius();
  const FrameTransition two = jet_frame_transition(t, 2, 2);
  REQUIRE(two.flat.has_value());
  CHECK(two.flat_is_constant);
  CHECK(constant_part(*two.flat) == sym_power_matrix(constant_part(*jet_frame_transition(t, 1, 1).flat), 2));
  CHECK(!jet_frame_transition(t, 2, 3).flat.has_value());
}

TEST_CASE("flat frames are constant for every shipped atlas") {
  for (const Atlas& a : builtin_atlases()) {
    for (int n = 1; n <= 5; ++n) CHECK(all_pass(flat_frame_check(a, n)));
  }
}

TEST_CASE("sym_power_check examples") {
  CHECK(all_pass(sym_power_check(Mobius::translation(Rational(5)), 1)));
  const Mobius t = Mobius::translation(Rational(1));
  CHECK(all_pass(sym_power_check(t, 2)));
  // Sym^2 of [[1,1],[0,1]] on (Y^2, XY, X^2), computed by hand
  const FrameTransition f = jet_frame_transition(t, 2, 2);
  Matrix<Rational> expected(3, 3);
  expected(0, 0) = 1;
  expected(0, 1) = 1;
  expected(0, 2) = 1;
  expected(1, 1) = 1;
  expected(1, 2) = 2;
  expected(2, 2) = 1;
  CHECK(constant_part(*f.flat) == expected);
  Rng rng(62);
  CHECK(all_pass(sym_power_check(rng.mobius(), 3)));
}

TEST_CASE("transport examples") {
  Rng rng(63);
  for (int n = 0; n <= 5; ++n) {
    std::vector<Rational> c;
    for (int i = 0; i <= n; ++i) c.push_back(rng.rational());
    const Jet j(n, n, rng.affine_point(), c);
    CHECK(transport(j, j.base()) == j);
    const PointP1 p = rng.affine_point();
    const PointP1 q = rng.affine_point();
    CHECK(transport(transport(j, p), q) == transport(j, q));
  }
  for (const Atlas& a : builtin_atlases()) {
    for (int n = 1; n <= 5; ++n) {
      const auto cs = transport_check(a, n);
      CHECK(all_pass(cs));
      CHECK(!matching(cs, "monodromy").empty());
      CHECK(!matching(cs, "transitive").empty());
    }
  }
}

TEST_CASE("global Bol operators glue and the wrong weights do not") {
  for (const Atlas& a : builtin_atlases()) {
    for (int n = 0; n <= 4; ++n) CHECK(all_pass(global_bol_check(a, n)));
  }
  for (int n = 0; n <= 4; ++n) {
    CHECK(!all_pass(matching(global_bol_check(projline_atlas(), n, n, -n), "/glues")));
    CHECK(!all_pass(matching(global_bol_check(scaling_atlas(), n, n, -n), "/glues")));
    // translations preserve every weight, so the control glues there
    CHECK(all_pass(matching(global_bol_check(translation_atlas(), n, n, -n), "/glues")));
  }
}

TEST_CASE("casimir_surface_check examples") {
  const auto four = casimir_surface_check(projline_atlas(), 2);
  CHECK(all_pass(four));
  CHECK(matching(four, "/scalar=4").size() == 2);
  const auto zero = casimir_surface_check(projline_atlas(), 0);
  CHECK(all_pass(zero));
  CHECK(matching(zero, "/scalar=0").size() == 2);
  const auto trans = casimir_surface_check(translation_atlas(), 3);
  CHECK(all_pass(matching(trans, "bracket-automorphism")));
  CHECK(matching(trans, "/scalar=15/2").size() == 2);
  for (const Atlas& a : builtin_atlases()) {
    for (int k = -2; k <= 4; ++k) CHECK(all_pass(casimir_surface_check(a, k)));
  }
}

TEST_CASE("phi_surface_check examples and the unnormalized control") {
  for (const Atlas& a : builtin_atlases()) {
    for (int n = 1; n <= 3; ++n) {
      CHECK(all_pass(phi_surface_check(a, n)));
      const auto control = phi_surface_check(a, n, false);
      CHECK(all_pass(matching(control, "/glues")));
      if (n >= 2) CHECK(!all_pass(matching(control, "/symbol")));
    }
  }
}

TEST_CASE("conjugate_fiber moves the base point with the map") {
  Rng rng(64);
  const Mobius m = rng.mobius();
  const FiberOp op{PointP1::affine(Rational(1, 3)), {Rational(0), Rational(2), Rational(5)}};
  if (m.inverse()(op.base).is_affine()) {
    const FiberOp moved = conjugate_fiber(op, m);
    CHECK(moved.base == m.inverse()(op.base));
    CHECK(conjugate_fiber(moved, m.inverse()) == op);
  }
  CHECK(conjugate_fiber(op, Mobius::identity()) == op);
}

TEST_CASE("sections of L^k glue through check_section") {
  const Atlas a = projline_atlas();
  const Transition& t = a.transitions.at(0);
  const RatFunc f0(Poly{1, 2, 3});
  SurfaceSection s{{{t.from, f0}, {t.to, weight_pullback(t.mobius(), f0, 2)}}, 2};
  CHECK(all_pass(check_section(a, s)));
  s.representatives[t.to] = RatFunc(Poly{1});
  CHECK(!all_pass(check_section(a, s)));
}

TEST_CASE("lift uses the declared matrix or the inverse of the reverse transition") {
  const Atlas a = projline_atlas();
  CHECK(a.lift("U0", "U0") == Mobius::identity());
  CHECK(a.lift("U0", "U1") == a.transitions.at(0).mobius());
  CHECK(a.lift("U1", "U0") == a.transitions.at(0).mobius().inverse());
  try {
    (void)a.lift("U0", "U7");
    FAIL("expected UnknownChart");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownChart);
  }
}

TEST_CASE("shipped atlas files parse to the built-in atlases") {
  CHECK(load_atlas(kData + "/atlases/projline.json") == projline_atlas());
  CHECK(load_atlas(kData + "/atlases/scaling.json") == scaling_atlas());
  CHECK(load_atlas(kData + "/atlases/translation.json") == translation_atlas());
  const Atlas bad = load_atlas(kData + "/atlases/bad_lift.json");
  CHECK(!validate_atlas(bad).valid());
  CHECK(validate_atlas(bad).obstructions.size() == 1);
}

TEST_CASE("atlas text round-trips to a fixed point") {
  for (const Atlas& a : builtin_atlases()) {
    const std::string once = emit_atlas(a);
    CHECK(parse_atlas(once) == a);
    CHECK(emit_atlas(parse_atlas(once)) == once);
  }
  Atlas big = projline_atlas();
  big.name = "big";
  big.charts[0].sample_points.push_back(PointP1::affine(Rational::parse("123456789012345678901234567/5")));
  const std::string text = emit_atlas(big);
  CHECK(text.find("\"123456789012345678901234567\"") != std::string::npos);
  CHECK(parse_atlas(text) == big);
  const std::string file = read_file(kData + "/atlases/projline.json");
  CHECK(emit_atlas(parse_atlas(emit_atlas(parse_atlas(file, "projline")))) == emit_atlas(parse_atlas(file, "projline")));
}

TEST_CASE("atlas parse errors carry line and column") {
  auto error_at = [](const std::string& text) {
    try {
      (void)parse_atlas(text, "t");
    } catch (const AtlasParseError& e) {
      CHECK(e.kind() == ErrorKind::AtlasParseError);
      return std::make_pair(e.line(), e.column());
    }
    FAIL("expected AtlasParseError");
    return std::make_pair(std::size_t{0}, std::size_t{0});
  };
  const std::string floaty =
      "{\"name\": \"x\",\n \"charts\": [{\"id\": \"U0\", \"sample_points\": [[[1.5, 1], [1, 1]]]}]}";
  CHECK(error_at(floaty) == std::make_pair(std::size_t{2}, std::size_t{46}));
  const auto [l1, c1] = error_at("{\"charts\": [],\n\"oops\": 1}");
  CHECK(l1 == 2);
  CHECK(c1 == 1);
  const auto [l2, c2] = error_at("{\"charts\": [{\"id\": \"U0\", \"sample_points\": [[[1, 0], [1, 1]]]}]}");
  CHECK(l2 == 1);
  CHECK(c2 > 40);
  const auto [l3, c3] = error_at("{\"charts\": [");
  CHECK(l3 == 1);
  CHECK(c3 >= 12);
  const auto [l4, c4] = error_at("{\"charts\": [], \"charts\": []}");
  CHECK(l4 == 1);
  CHECK(c4 == 16);
  try {
    (void)load_atlas(kData + "/atlases/does-not-exist.json");
    FAIL("expected AtlasParseError");
  } catch (const AtlasParseError& e) {
    CHECK(e.line() == 0);
  }
}
