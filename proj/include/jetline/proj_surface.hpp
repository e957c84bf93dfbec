#pragma once

// Riemann surfaces given by formal atlases whose transitions are Möbius maps
// with chosen SL(2) lifts, and the chart-by-chart checks that the projective
// line constructions glue.
//
// A transition (from, to, M) means z_from = M(z_to): local sections of L^k
// move from `from` to `to` by weight_pullback(M, ., k), and jets move by
// jet_transition(., M). A declared triple (i, j, k) requires
// M_ij * M_jk == M_ik, where i -> i is the identity.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jetline/diffops.hpp"
#include "jetline/jets.hpp"
#include "jetline/matrix.hpp"
#include "jetline/proj_line.hpp"
#include "jetline/report.hpp"

namespace jetline {

struct Chart {
  std::string id;
  /// Points affine in this chart; they drive pointwise checks.
  std::vector<PointP1> sample_points;
  friend bool operator==(const Chart&, const Chart&) = default;
};

struct Transition {
  std::string from;
  std::string to;
  /// Row-major [[a, b], [c, d]]; kept raw so that a bad determinant is a
  /// validation finding rather than a construction failure.
  std::array<Rational, 4> matrix;

  Rational determinant() const { return matrix[0] * matrix[3] - matrix[1] * matrix[2]; }
  /// Throws NotUnimodular if the determinant is not 1.
  Mobius mobius() const { return Mobius(matrix[0], matrix[1], matrix[2], matrix[3]); }
  std::string label() const { return from + "->" + to; }
  friend bool operator==(const Transition&, const Transition&) = default;
};

struct Triple {
  std::string i;
  std::string j;
  std::string k;
  std::string label() const { return i + "," + j + "," + k; }
  friend bool operator==(const Triple&, const Triple&) = default;
};

struct Atlas {
  std::string name;
  std::vector<Chart> charts;
  std::vector<Transition> transitions;
  std::vector<Triple> triples;

  const Chart* find_chart(const std::string& id) const;
  const Transition* find_transition(const std::string& from, const std::string& to) const;
  /// The lift for from -> to: identity when from == to, the declared matrix,
  /// or the inverse of a declared to -> from. Throws UnknownChart otherwise.
  Mobius lift(const std::string& from, const std::string& to) const;
  friend bool operator==(const Atlas&, const Atlas&) = default;
};

/// The shipped atlases: the two-chart projective line, z -> 4z with lift
/// diag(2, 1/2), and z -> z + 1.
Atlas projline_atlas();
Atlas scaling_atlas();
Atlas translation_atlas();
std::vector<Atlas> builtin_atlases();

struct LiftObstruction {
  Triple triple;
  std::string product;
  std::string declared;
};

struct AtlasValidation {
  /// Sorted by id, so the result does not depend on declaration order.
  std::vector<CheckRecord> checks;
  std::vector<LiftObstruction> obstructions;
  bool valid() const;
};

AtlasValidation validate_atlas(const Atlas& atlas);

/// Section of L^k given chartwise.
struct SurfaceSection {
  std::map<std::string, RatFunc> representatives;
  int weight = 0;
};

/// Formal identity weight_pullback(M, f_from, k) == f_to for every transition
/// between charts carrying a representative, plus pointwise agreement at the
/// sample points of the target chart.
std::vector<CheckRecord> check_section(const Atlas& atlas, const SurfaceSection& s);

struct FrameTransition {
  /// Transition in Taylor-coefficient coordinates, a function of the target base point.
  JetFrameMatrix raw;
  /// The same map in the frame of jets of global forms (only when k == n).
  std::optional<JetFrameMatrix> flat;
  bool flat_is_constant = false;
};

FrameTransition jet_frame_transition(const Mobius& t, int n, int k);

/// Constant flat-frame matrix for (n, n) equals Sym^n of the one for (1, 1).
std::vector<CheckRecord> sym_power_check(const Mobius& t, int n);

/// Parallel transport of an (n, n)-jet to another point of its chart.
Jet transport(const Jet& j, const PointP1& target);

/// Transitivity at three points per chart and compatibility with every
/// transition (transport commutes with jet_transition), plus monodromy out
/// through each transition and back through the return lift.
std::vector<CheckRecord> transport_check(const Atlas& atlas, int n);

/// d^(n+1) glues under every transition between the given weights; the
/// default weights (n, -n-2) are the Bol ones.
std::vector<CheckRecord> global_bol_check(const Atlas& atlas, int n);
std::vector<CheckRecord> global_bol_check(const Atlas& atlas, int n, int source_weight, int target_weight);

/// Lie structure on J^2(T) = J^2(L^2) restricted to S^2(V), Casimir invariance
/// under every transition, and the scalar mu_k in each chart.
std::vector<CheckRecord> casimir_surface_check(const Atlas& atlas, int k);

/// phi glues fiberwise across transitions and satisfies the symbol condition
/// in every chart. With normalized == false the normalization scalar is
/// dropped, which keeps gluing but breaks the symbol condition.
std::vector<CheckRecord> phi_surface_check(const Atlas& atlas, int n, bool normalized = true);

/// Flat-frame constancy and equality with form_action_matrix for every transition.
std::vector<CheckRecord> flat_frame_check(const Atlas& atlas, int n);

/// Operator at a fiber after conjugation by M, reading c_j as constants at M(p).
FiberOp conjugate_fiber(const FiberOp& op, const Mobius& m);

}  // namespace jetline
