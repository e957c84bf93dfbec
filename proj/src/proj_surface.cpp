#include "jetline/proj_surface.hpp"

#include <algorithm>
#include <set>

#include "jetline/errors.hpp"
#include "jetline/lie_casimir.hpp"

namespace jetline {

namespace {

std::string rat_str(const Rational& r) { return r.to_string(); }
std::string rf_str(const RatFunc& f) { return f.to_string(); }

std::string mat_str(const Matrix<Rational>& m) { return m.to_string(rat_str); }

std::string raw_matrix_str(const std::array<Rational, 4>& m) {
  return "[[" + m[0].to_string() + ", " + m[1].to_string() + "], [" + m[2].to_string() + ", " + m[3].to_string() + "]]";
}

std::string prefix(const Atlas& a) { return "atlas/" + (a.name.empty() ? std::string("unnamed") : a.name) + "/"; }

std::string coeffs_str(const std::vector<Rational>& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + c[i].to_string();
  return s + ")";
}

// Transitions whose determinant is 1; the others are reported by validation
// and skipped by the gluing checks.
std::vector<std::pair<const Transition*, Mobius>> usable(const Atlas& atlas) {
  std::vector<std::pair<const Transition*, Mobius>> out;
  for (const auto& t : atlas.transitions) {
    if (t.determinant().is_one()) out.emplace_back(&t, t.mobius());
  }
  return out;
}

// Unit jets e_0..e_order at p: they span the fiber, so a linear identity
// checked on them holds on the whole fiber.
std::vector<Jet> unit_jets(int weight, int order, const PointP1& p, const std::string& chart) {
  std::vector<Jet> out;
  for (int i = 0; i <= order; ++i) {
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    c[static_cast<std::size_t>(i)] = Rational(1);
    out.emplace_back(weight, order, p, std::move(c), chart);
  }
  return out;
}

}  // namespace

// ---- atlas ----

const Chart* Atlas::find_chart(const std::string& id) const {
  auto it = std::find_if(charts.begin(), charts.end(), [&](const Chart& c) { return c.id == id; });
  return it == charts.end() ? nullptr : &*it;
}

const Transition* Atlas::find_transition(const std::string& from, const std::string& to) const {
  auto it = std::find_if(transitions.begin(), transitions.end(),
                         [&](const Transition& t) { return t.from == from && t.to == to; });
  return it == transitions.end() ? nullptr : &*it;
}

Mobius Atlas::lift(const std::string& from, const std::string& to) const {
  if (from == to) return Mobius::identity();
  if (const Transition* t = find_transition(from, to)) return t->mobius();
  if (const Transition* t = find_transition(to, from)) return t->mobius().inverse();
  throw Error(ErrorKind::UnknownChart, "no transition between " + from + " and " + to);
}

Atlas projline_atlas() {
  Atlas a;
  a.name = "projline";
  a.charts = {{"U0", {PointP1::affine(1), PointP1::affine(2), PointP1::affine(Rational(-1, 2))}},
              {"U1", {PointP1::affine(1), PointP1::affine(3), PointP1::affine(-2)}}};
  a.transitions = {{"U0", "U1", {Rational(0), Rational(-1), Rational(1), Rational(0)}}};
  return a;
}

Atlas scaling_atlas() {
  Atlas a;
  a.name = "scaling";
  a.charts = {{"U0", {PointP1::affine(1), PointP1::affine(3), PointP1::affine(Rational(1, 2))}},
              {"U1", {PointP1::affine(Rational(1, 4)), PointP1::affine(2), PointP1::affine(-1)}}};
  a.transitions = {{"U0", "U1", {Rational(2), Rational(0), Rational(0), Rational(1, 2)}}};
  return a;
}

Atlas translation_atlas() {
  Atlas a;
  a.name = "translation";
  a.charts = {{"U0", {PointP1::affine(0), PointP1::affine(1), PointP1::affine(Rational(5, 2))}},
              {"U1", {PointP1::affine(-1), PointP1::affine(Rational(1, 3)), PointP1::affine(4)}}};
  a.transitions = {{"U0", "U1", {Rational(1), Rational(1), Rational(0), Rational(1)}}};
  return a;
}

std::vector<Atlas> builtin_atlases() { return {projline_atlas(), scaling_atlas(), translation_atlas()}; }

bool AtlasValidation::valid() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

AtlasValidation validate_atlas(const Atlas& atlas) {
  AtlasValidation out;
  const std::string pre = prefix(atlas);

  std::set<std::string> ids;
  std::vector<std::string> duplicates;
  for (const auto& c : atlas.charts) {
    if (!ids.insert(c.id).second) duplicates.push_back(c.id);
  }
  std::sort(duplicates.begin(), duplicates.end());
  std::string dup_list;
  for (const auto& d : duplicates) dup_list += (dup_list.empty() ? "" : ",") + d;
  out.checks.push_back(make_check(pre + "charts/unique-ids", std::to_string(atlas.charts.size()), duplicates.empty(),
                                  "duplicates: " + dup_list, "none"));

  for (const auto& c : atlas.charts) {
    const bool affine = std::all_of(c.sample_points.begin(), c.sample_points.end(),
                                    [](const PointP1& p) { return p.is_affine(); });
    out.checks.push_back(make_check(pre + "charts/" + c.id + "/samples-affine", c.id, affine, "sample at infinity",
                                    "all affine"));
  }

  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& t : atlas.transitions) {
    const std::string id = pre + "transition/" + t.label();
    const std::string inputs = t.label() + raw_matrix_str(t.matrix);
    const bool known = atlas.find_chart(t.from) && atlas.find_chart(t.to);
    out.checks.push_back(make_check(id + "/charts-known", inputs, known, "undeclared chart", "declared charts"));
    const Rational det = t.determinant();
    out.checks.push_back(make_check(id + "/det", inputs, det.is_one(), det.to_string(), "1"));
    const bool fresh = seen.insert({t.from, t.to}).second;
    if (!fresh) out.checks.push_back(make_check(id + "/unique", inputs, false, "declared twice", "declared once"));
  }

  for (const auto& tr : atlas.triples) {
    const std::string id = pre + "triple/" + tr.label();
    auto entry = [&](const std::string& a, const std::string& b) -> std::optional<std::array<Rational, 4>> {
      if (a == b) return std::array<Rational, 4>{Rational(1), Rational(0), Rational(0), Rational(1)};
      const Transition* t = atlas.find_transition(a, b);
      if (!t) return std::nullopt;
      return t->matrix;
    };
    const auto mij = entry(tr.i, tr.j);
    const auto mjk = entry(tr.j, tr.k);
    const auto mik = entry(tr.i, tr.k);
    if (!mij || !mjk || !mik) {
      out.checks.push_back(make_check(id, tr.label(), false, "missing transition", "declared transitions"));
      continue;
    }
    const auto& x = *mij;
    const auto& y = *mjk;
    const std::array<Rational, 4> prod{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                                       x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
    const bool equal = prod == *mik;
    const std::string inputs = tr.label() + raw_matrix_str(x) + raw_matrix_str(y) + raw_matrix_str(*mik);
    out.checks.push_back(make_check(id, inputs, equal, raw_matrix_str(prod), raw_matrix_str(*mik)));
    if (!equal) {
      const std::array<Rational, 4> neg{-(*mik)[0], -(*mik)[1], -(*mik)[2], -(*mik)[3]};
      if (prod == neg) out.obstructions.push_back({tr, raw_matrix_str(prod), raw_matrix_str(*mik)});
    }
  }

  std::stable_sort(out.checks.begin(), out.checks.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  std::sort(out.obstructions.begin(), out.obstructions.end(),
            [](const LiftObstruction& a, const LiftObstruction& b) { return a.triple.label() < b.triple.label(); });
  return out;
}

std::vector<CheckRecord> check_section(const Atlas& atlas, const SurfaceSection& s) {
  std::vector<CheckRecord> out;
  const std::string pre = prefix(atlas) + "section/k=" + std::to_string(s.weight) + "/";
  for (const auto& [t, m] : usable(atlas)) {
    auto from = s.representatives.find(t->from);
    auto to = s.representatives.find(t->to);
    if (from == s.representatives.end() || to == s.representatives.end()) continue;
    const RatFunc moved = weight_pullback(m, from->second, s.weight);
    const std::string inputs = from->second.to_string() + "|" + to->second.to_string();
    out.push_back(make_check(pre + t->label() + "/formal", inputs, moved == to->second, moved.to_string(),
                             to->second.to_string()));
    if (const Chart* c = atlas.find_chart(t->to)) {
      for (const auto& p : c->sample_points) {
        const PointP1 image = m(p);
        if (!p.is_affine() || !image.is_affine()) continue;
        const Rational& z = p.coordinate();
        if (to->second.den()(z).is_zero() || moved.den()(z).is_zero()) continue;
        const Rational lhs = moved(z);
        const Rational rhs = to->second(z);
        out.push_back(make_check(pre + t->label() + "/at/" + p.to_string(), inputs + "@" + p.to_string(), lhs == rhs,
                                 lhs.to_string(), rhs.to_string()));
      }
    }
  }
  return out;
}

// ---- frames ----

FrameTransition jet_frame_transition(const Mobius& t, int n, int k) {
  FrameTransition out;
  out.raw = raw_transition_matrix(t, n, k);
  if (k != n) return out;
  const RatFunc q(Poly::z());
  const RatFunc moved(Poly::linear(t.a(), t.b()), Poly::linear(t.c(), t.d()));
  const auto e_inv = eval_frame_matrix(n, q).inverse();
  if (!e_inv) throw Error(ErrorKind::DimensionMismatch, "evaluation frame is singular");
  out.flat = *e_inv * out.raw * eval_frame_matrix(n, moved);
  out.flat_is_constant = is_constant(*out.flat);
  return out;
}

std::vector<CheckRecord> sym_power_check(const Mobius& t, int n) {
  std::vector<CheckRecord> out;
  const std::string id = "sym-power/n=" + std::to_string(n) + "/" + t.to_string();
  const FrameTransition one = jet_frame_transition(t, 1, 1);
  const FrameTransition big = jet_frame_transition(t, n, n);
  const bool constant = one.flat_is_constant && big.flat_is_constant;
  out.push_back(make_check(id + "/flat-constant", t.to_string(), constant, big.flat->to_string(rf_str), "constant"));
  if (!constant) return out;
  const Matrix<Rational> lhs = constant_part(*big.flat);
  const Matrix<Rational> rhs = sym_power_matrix(constant_part(*one.flat), n);
  out.push_back(make_check(id, t.to_string(), lhs == rhs, mat_str(lhs), mat_str(rhs)));
  return out;
}

std::vector<CheckRecord> flat_frame_check(const Atlas& atlas, int n) {
  std::vector<CheckRecord> out;
  const std::string pre = prefix(atlas) + "flat-frame/n=" + std::to_string(n) + "/";
  for (const auto& [t, m] : usable(atlas)) {
    const FrameTransition f = jet_frame_transition(m, n, n);
    out.push_back(make_check(pre + t->label() + "/constant", m.to_string(), f.flat_is_constant,
                             f.flat->to_string(rf_str), "constant"));
    if (!f.flat_is_constant) continue;
    const Matrix<Rational> lhs = constant_part(*f.flat);
    const Matrix<Rational> rhs = form_action_matrix(m, n);
    out.push_back(make_check(pre + t->label() + "/form-action", m.to_string(), lhs == rhs, mat_str(lhs), mat_str(rhs)));
    const auto sp = sym_power_check(m, n);
    for (auto c : sp) {
      const bool flat = c.id.ends_with("/flat-constant");
      c.id = pre + t->label() + "/sym-power" + (flat ? "/flat-constant" : "");
      out.push_back(std::move(c));
    }
  }
  return out;
}

// ---- transport ----

Jet transport(const Jet& j, const PointP1& target) {
  if (j.order() != j.weight()) throw Error(ErrorKind::OrderWeightMismatch, "transport needs order == weight");
  return eval_global(reconstruct(j), target, j.order(), j.chart());
}

std::vector<CheckRecord> transport_check(const Atlas& atlas, int n) {
  std::vector<CheckRecord> out;
  const std::string pre = prefix(atlas) + "transport/n=" + std::to_string(n) + "/";
  for (const auto& chart : atlas.charts) {
    const auto& pts = chart.sample_points;
    if (pts.size() < 3) continue;
    for (const Jet& j : unit_jets(n, n, pts[0], chart.id)) {
      const Jet direct = transport(j, pts[2]);
      const Jet stepped = transport(transport(j, pts[1]), pts[2]);
      const std::string inputs = j.to_string();
      out.push_back(make_check(pre + chart.id + "/transitive/" + coeffs_str(j.coeffs()), inputs, direct == stepped,
                               stepped.to_string(), direct.to_string()));
      const Jet home = transport(j, j.base());
      out.push_back(make_check(pre + chart.id + "/identity/" + coeffs_str(j.coeffs()), inputs, home == j,
                               home.to_string(), j.to_string()));
    }
  }
  for (const auto& [t, m] : usable(atlas)) {
    const Chart* from = atlas.find_chart(t->from);
    const Chart* to = atlas.find_chart(t->to);
    if (!from || !to) continue;
    const Mobius back = m.inverse();
    for (const auto& p : from->sample_points) {
      if (!back(p).is_affine()) continue;
      for (const auto& r : to->sample_points) {
        const PointP1 r_from = m(r);
        if (!r_from.is_affine()) continue;
        for (const Jet& j : unit_jets(n, n, p, t->from)) {
          const Jet lhs = jet_transition(transport(j, r_from), m, t->to);
          const Jet rhs = transport(jet_transition(j, m, t->to), r);
          out.push_back(make_check(pre + t->label() + "/compatible/" + p.to_string() + "->" + r.to_string() + "/" +
                                       coeffs_str(j.coeffs()),
                                   j.to_string() + r.to_string(), lhs == rhs, lhs.to_string(), rhs.to_string()));
        }
      }
    }
  }
  // Monodromy: out through each transition, transport in the far chart, and
  // back through the return lift.
  for (const auto& [t, m] : usable(atlas)) {
    const Chart* start = atlas.find_chart(t->from);
    if (!start) continue;
    const Mobius back = atlas.lift(t->to, t->from);
    for (const auto& p : start->sample_points) {
      const PointP1 q = m.inverse()(p);
      if (!q.is_affine()) continue;
      for (const Jet& j : unit_jets(n, n, p, t->from)) {
        const Jet moved = transport(jet_transition(j, m, t->to), q);
        const Jet home = jet_transition(moved, back, t->from);
        out.push_back(make_check(pre + "monodromy/" + t->label() + "/" + p.to_string() + "/" + coeffs_str(j.coeffs()),
                                 j.to_string(), home == j, home.to_string(), j.to_string()));
      }
    }
  }
  return out;
}

// ---- Bol ----

std::vector<CheckRecord> global_bol_check(const Atlas& atlas, int n) { return global_bol_check(atlas, n, n, -n - 2); }

std::vector<CheckRecord> global_bol_check(const Atlas& atlas, int n, int source_weight, int target_weight) {
  std::vector<CheckRecord> out;
  const std::string pre = prefix(atlas) + "bol/n=" + std::to_string(n) + "/w=" + std::to_string(source_weight) + "," +
                          std::to_string(target_weight) + "/";
  const DiffOp op = DiffOp::derivative_power(n + 1, source_weight, target_weight);
  for (const auto& [t, m] : usable(atlas)) {
    const DiffOp conj = conjugate(op, m);
    out.push_back(make_check(pre + t->label() + "/glues", m.to_string(), conj == op, conj.to_string(), op.to_string()));
  }
  for (const auto& c : atlas.charts) {
    const Symbol s = symbol(op);
    const bool ok = s.value == RatFunc(1) && s.weight == 0;
    out.push_back(make_check(pre + c.id + "/symbol", c.id, ok,
                             s.value.to_string() + " weight " + std::to_string(s.weight), "1 weight 0"));
  }
  return out;
}

// ---- Casimir ----

std::vector<CheckRecord> casimir_surface_check(const Atlas& atlas, int k) {
  std::vector<CheckRecord> out;
  const std::string pre_k = prefix(atlas) + "casimir/k=" + std::to_string(k) + "/";
  const std::string& pre = pre_k;
  const SymTensor2 c = casimir_tensor();
  const Rational mu = casimir_scalar(k);

  for (const auto& [t, m] : usable(atlas)) {
    const std::string id = pre + t->label();
    // J^2(T) = J^2(L^2): its flat frame is S^2(V).
    const FrameTransition frame = jet_frame_transition(m, 2, 2);
    out.push_back(make_check(id + "/frame-constant", m.to_string(), frame.flat_is_constant,
                             frame.flat->to_string(rf_str), "constant"));
    if (frame.flat_is_constant) {
      const Matrix<Rational> a = constant_part(*frame.flat);
      // The frame acts on S^2(V) exactly as pulling back vector fields.
      for (int i = 0; i <= 2; ++i) {
        const BinaryForm q = BinaryForm::monomial(2, i);
        BinaryForm image(2, a.column(static_cast<std::size_t>(i)));
        const VectorField lhs = s2_to_sl2(image);
        const VectorField rhs = transport_field(m, s2_to_sl2(q));
        out.push_back(make_check(id + "/frame-is-field-transport/" + std::to_string(i), m.to_string(), lhs == rhs,
                                 lhs.to_string(), rhs.to_string()));
      }
    }
    for (int i = 0; i <= 2; ++i) {
      for (int j = i + 1; j <= 2; ++j) {
        const VectorField x = s2_to_sl2(BinaryForm::monomial(2, i));
        const VectorField y = s2_to_sl2(BinaryForm::monomial(2, j));
        const VectorField lhs = bracket(transport_field(m, x), transport_field(m, y));
        const VectorField rhs = transport_field(m, bracket(x, y));
        out.push_back(make_check(id + "/bracket-automorphism/" + std::to_string(i) + std::to_string(j), m.to_string(),
                                 lhs == rhs, lhs.to_string(), rhs.to_string()));
      }
    }
    const SymTensor2 moved = transport_tensor(m, c);
    out.push_back(make_check(id + "/tensor-invariant", m.to_string(), moved == c, mat_str(moved.matrix()),
                             mat_str(c.matrix())));
    // Chartwise Casimir operators agree: C(M^* f) = M^* (C f).
    for (int e = 0; e <= 4; ++e) {
      const RatFunc f(Poly::monomial(Rational(1), e));
      const RatFunc lhs = second_order_lie(c, weight_pullback(m, f, k), k);
      const RatFunc rhs = weight_pullback(m, second_order_lie(c, f, k), k);
      out.push_back(make_check(pre_k + t->label() + "/operators-agree/z^" + std::to_string(e), m.to_string(),
                               lhs == rhs, lhs.to_string(), rhs.to_string()));
    }
  }

  // mu_k in each chart, on sections expressed there; a chart reached by a
  // transition sees the pulled-back test sections.
  for (const auto& chart : atlas.charts) {
    std::vector<RatFunc> tests;
    for (int e = 0; e <= 4; ++e) tests.emplace_back(Poly::monomial(Rational(1), e));
    for (const auto& [t, m] : usable(atlas)) {
      if (t->to != chart.id && t->from != chart.id) continue;
      const Mobius into = t->to == chart.id ? m : atlas.lift(t->to, t->from);
      for (int e = 0; e <= 4; ++e) tests.push_back(weight_pullback(into, RatFunc(Poly::monomial(Rational(1), e)), k));
    }
    bool ok = true;
    std::string lhs_s;
    std::string rhs_s;
    for (const auto& f : tests) {
      const RatFunc lhs = second_order_lie(c, f, k);
      const RatFunc rhs = RatFunc(mu) * f;
      if (!(lhs == rhs)) {
        ok = false;
        lhs_s = lhs.to_string();
        rhs_s = rhs.to_string();
        break;
      }
    }
    out.push_back(make_check(pre_k + chart.id + "/scalar=" + mu.to_string(), chart.id, ok, lhs_s, rhs_s));
  }
  return out;
}

// ---- phi ----

FiberOp conjugate_fiber(const FiberOp& op, const Mobius& m) {
  std::vector<RatFunc> coeffs;
  for (const auto& c : op.coeffs) coeffs.emplace_back(c);
  const DiffOp conj = conjugate(DiffOp(coeffs, 0, 0), m);
  const PointP1 p = m.inverse()(op.base);
  const Rational& z = p.coordinate();
  FiberOp out{p, std::vector<Rational>(op.coeffs.size())};
  for (int j = 0; j <= conj.order() && j < static_cast<int>(op.coeffs.size()); ++j)
    out.coeffs[static_cast<std::size_t>(j)] = conj.coeff(j)(z);
  return out;
}

std::vector<CheckRecord> phi_surface_check(const Atlas& atlas, int n, bool normalized) {
  std::vector<CheckRecord> out;
  const std::string pre = prefix(atlas) + (normalized ? "phi" : "phi-unnormalized") + "/n=" + std::to_string(n) + "/";
  auto phi = [&](const Jet& j) { return normalized ? phi_apply(n, j) : phi_apply_unnormalized(n, j); };

  for (const auto& [t, m] : usable(atlas)) {
    const Chart* from = atlas.find_chart(t->from);
    if (!from) continue;
    for (const auto& p : from->sample_points) {
      if (!m.inverse()(p).is_affine()) continue;
      for (const Jet& j : unit_jets(2 * n, n - 1, p, t->from)) {
        const FiberOp lhs = conjugate_fiber(phi(j), m);
        const FiberOp rhs = phi(jet_transition(j, m, t->to));
        out.push_back(make_check(pre + t->label() + "/glues/" + p.to_string() + "/" + coeffs_str(j.coeffs()),
                                 j.to_string(), lhs == rhs, lhs.to_string(), rhs.to_string()));
      }
    }
  }
  for (const auto& chart : atlas.charts) {
    for (const auto& p : chart.sample_points) {
      if (!p.is_affine()) continue;
      for (const Jet& j : unit_jets(2 * n, n - 1, p, chart.id)) {
        const FiberOp op = phi(j);
        const Rational& sym = op.coeffs.back();
        out.push_back(make_check(pre + chart.id + "/symbol/" + p.to_string() + "/" + coeffs_str(j.coeffs()),
                                 j.to_string(), sym == j.coeff(0), sym.to_string(), j.coeff(0).to_string()));
      }
    }
  }
  return out;
}

}  // namespace jetline
