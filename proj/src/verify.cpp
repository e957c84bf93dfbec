#include "jetline/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <future>

#include "jetline/atlas_io.hpp"
#include "jetline/diffops.hpp"
#include "jetline/errors.hpp"
#include "jetline/lie_casimir.hpp"
#include "jetline/random.hpp"

namespace jetline {

namespace {

std::string rat_str(const Rational& r) { return r.to_string(); }
std::string mat_str(const Matrix<Rational>& m) { return m.to_string(rat_str); }

std::string tag(const char* name, int v, int width = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s=%0*d", name, width, v);
  return buf;
}

Mobius mobius_keeping_affine(Rng& rng, const PointP1& p) {
  while (true) {
    const Mobius m = rng.mobius();
    if (m.inverse()(p).is_affine()) return m;
  }
}

Jet random_jet(Rng& rng, int weight, int order, const PointP1& p) {
  std::vector<Rational> c;
  for (int i = 0; i <= order; ++i) c.push_back(rng.rational());
  return Jet(weight, order, p, std::move(c));
}

std::vector<Rational> flatten(const Matrix<Rational>& m) {
  std::vector<Rational> v;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

// Whether `m` lies in the span of `basis`.
bool in_span(const std::vector<Matrix<Rational>>& basis, const Matrix<Rational>& m) {
  const std::size_t len = m.rows() * m.cols();
  Matrix<Rational> a(len, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) a.set_column(j, flatten(basis[j]));
  Matrix<Rational> b(len, basis.size() + 1);
  for (std::size_t j = 0; j < basis.size(); ++j) b.set_column(j, flatten(basis[j]));
  b.set_column(basis.size(), flatten(m));
  return a.rank() == b.rank();
}

Matrix<Rational> from_columns(const std::vector<std::vector<Rational>>& cols, std::size_t rows) {
  Matrix<Rational> m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

void append(SuiteResult& into, SuiteResult&& from, const std::string& note_key = {}) {
  into.checks.insert(into.checks.end(), std::make_move_iterator(from.checks.begin()),
                     std::make_move_iterator(from.checks.end()));
  if (!note_key.empty() && !from.notes.empty()) into.notes[note_key] = std::move(from.notes);
}

}  // namespace

SuiteResult suite_splitting(int max_n, int max_m, int count, std::uint64_t seed) {
  SuiteResult out;
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const int n = static_cast<int>(rng.uniform(0, max_n));
    const int m = static_cast<int>(rng.uniform(n, std::max(n, max_m)));
    const PointP1 p = rng.affine_point();
    const Jet j = random_jet(rng, n, n, p);
    const Mobius t = mobius_keeping_affine(rng, p);
    const std::string id = "splitting/" + tag("case", i, 3) + "/" + tag("n", n) + "/" + tag("m", m) + "/";
    const std::string inputs = j.to_string() + "|" + std::to_string(m) + "|" + t.to_string();

    const Jet s = split(j, m);
    const Jet back = truncate(s, n);
    out.checks.push_back(make_check(id + "truncate-split", inputs, back == j, back.to_string(), j.to_string()));
    const Jet again = eval_global(reconstruct(j), p, n);
    out.checks.push_back(make_check(id + "reconstruct-eval", inputs, again == j, again.to_string(), j.to_string()));
    const Jet lhs = jet_transition(s, t);
    const Jet rhs = split(jet_transition(j, t), m);
    out.checks.push_back(make_check(id + "equivariant", inputs, lhs == rhs, lhs.to_string(), rhs.to_string()));
  }
  return out;
}

SuiteResult suite_cmz(int max_n, int maps, std::uint64_t seed) {
  SuiteResult out;
  Rng rng(seed);
  for (int n = 1; n <= max_n; ++n) {
    for (int i = 0; i < maps; ++i) {
      const Mobius t = rng.mobius();
      const RatFunc f(rng.poly(6));
      const RatFunc pulled = weight_pullback(t, f, 2 * n);
      const std::string id = "equivariance-cmz/" + tag("n", n) + "/" + tag("map", i) + "/";
      const std::string inputs = t.to_string() + "|" + f.to_string();

      const DiffOp lhs = conjugate(cmz_operator(n, f), t);
      const DiffOp rhs = cmz_operator(n, pulled);
      out.checks.push_back(make_check(id + "conjugation", inputs, lhs == rhs, lhs.to_string(), rhs.to_string()));

      const DiffOp d_f = cmz_operator(n, f);
      for (int e = 0; e <= 6; ++e) {
        const RatFunc g(Poly::monomial(Rational(1), e));
        const RatFunc a = apply_op(rhs, weight_pullback(t, g, 0));
        const RatFunc b = weight_pullback(t, apply_op(d_f, g), 0);
        out.checks.push_back(
            make_check(id + "operational/z^" + std::to_string(e), inputs, a == b, a.to_string(), b.to_string()));
      }
    }
  }
  return out;
}

SuiteResult suite_bol(int max_n, int maps, std::uint64_t seed) {
  SuiteResult out;
  Rng rng(seed);
  for (int n = 0; n <= max_n; ++n) {
    const DiffOp op = bol_operator(n);
    const std::string pre = "bol/" + tag("n", n) + "/";
    const Symbol s = symbol(op);
    out.checks.push_back(make_check(pre + "symbol", std::to_string(n), s.value == RatFunc(1) && s.weight == 0,
                                    s.value.to_string() + " weight " + std::to_string(s.weight), "1 weight 0"));
    for (int i = 0; i < maps; ++i) {
      const Mobius t = rng.mobius();
      const DiffOp conj = conjugate(op, t);
      out.checks.push_back(
          make_check(pre + "invariant/" + tag("map", i), t.to_string(), conj == op, conj.to_string(), op.to_string()));
    }
    for (int a = 0; a <= n; ++a) {
      const BinaryForm f = BinaryForm::monomial(n, a);
      const RatFunc image = apply_op(op, RatFunc(dehomogenize(f)));
      out.checks.push_back(make_check(pre + "annihilates/" + tag("i", a), f.to_string(), image.is_zero(),
                                      image.to_string(), "0"));
    }
    for (int i = 0; i < 5; ++i) {
      const RatFunc f(rng.poly(n + 3));
      const PointP1 p = rng.affine_point();
      const Rational lhs = bol_pointwise(n, jet_of_local(f, n, p, n + 1));
      const Rational rhs = apply_op(op, f)(p.coordinate());
      out.checks.push_back(make_check(pre + "pointwise/" + tag("case", i), f.to_string() + "@" + p.to_string(),
                                      lhs == rhs, lhs.to_string(), rhs.to_string()));
    }
  }
  return out;
}

SuiteResult suite_phi(int max_n, std::uint64_t seed) {
  SuiteResult out;
  Rng rng(seed);
  nlohmann::ordered_json dims = nlohmann::ordered_json::object();
  nlohmann::ordered_json weighted = nlohmann::ordered_json::object();
  const int n_linear = std::min(max_n, 6);
  const int n_homs = std::min(max_n, 5);
  const int n_phi = std::min(max_n, 4);
  for (int n = 1; n <= n_linear; ++n) {
    const PointP1 x = rng.affine_point();
    const std::string pre = "phi/" + tag("n", n) + "/";
    const std::string inputs = std::to_string(n) + "@" + x.to_string();
    const Vec2 v = kernel_vector(x);
    const Covec2 w = point_covector(x);
    const Matrix<Rational> beta = beta_matrix(n, x);
    const Matrix<Rational> mv = mult_v_matrix(n, v);
    const Matrix<Rational> contraction = phi_fiber_contraction(n, x, w).matrix;

    const Matrix<Rational> ker = from_columns(beta.null_space(), beta.cols());
    out.checks.push_back(
        make_check(pre + "ker-beta=im-mv", inputs, same_column_space(ker, mv), mat_str(ker), mat_str(mv)));
    const Matrix<Rational> im = contraction * mv;
    out.checks.push_back(make_check(pre + "contraction-kills-im-mv", inputs, im.is_zero(), mat_str(im), "0"));
    const std::size_t rb = beta.rank();
    const std::size_t rc = contraction.rank();
    out.checks.push_back(make_check(pre + "quotient-bijective", inputs,
                                    rb == static_cast<std::size_t>(n) && rc == static_cast<std::size_t>(n),
                                    "ranks " + std::to_string(rb) + "," + std::to_string(rc),
                                    "ranks " + std::to_string(n) + "," + std::to_string(n)));

    const Covec2 w3{w.x * Rational(3), w.y * Rational(3)};
    const Matrix<Rational> scaled = phi_fiber_contraction(n, x, w3).matrix;
    const Rational lambda_power = Rational(3).pow(n + 1);
    out.checks.push_back(make_check(pre + "omega-scaling", inputs, scaled == contraction.scaled(lambda_power),
                                    mat_str(scaled), mat_str(contraction.scaled(lambda_power))));
    const Matrix<Rational> norm1 = phi_matrix_via_contraction(n, x, w);
    const Matrix<Rational> norm3 = phi_matrix_via_contraction(n, x, w3);
    out.checks.push_back(
        make_check(pre + "omega-independent", inputs, norm1 == norm3, mat_str(norm3), mat_str(norm1)));

    if (n <= n_homs) {
      // N maps S^2n_(i+1) = v^(2n-i-1) S^(i+1) onto S^2n_i.
      const Matrix<Rational> big_n = derivation_matrix(nilpotent_at(x), 2 * n);
      auto layer = [&](int i) {
        return form_matrix(i, 2 * n, [&](const BinaryForm& f) { return mult_v(f, v, 2 * n - i); });
      };
      for (int i = 0; i < 2 * n; ++i) {
        const Matrix<Rational> image = big_n * layer(i + 1);
        out.checks.push_back(make_check(pre + "filtration/" + tag("i", i), inputs,
                                        same_column_space(image, layer(i)), mat_str(image), mat_str(layer(i))));
      }
      const auto homs = n_equivariant_homs(n, x);
      dims[std::to_string(n)] = homs.size();
      out.checks.push_back(make_check(pre + "n-equivariant/dimension", inputs, homs.size() == 1,
                                      std::to_string(homs.size()), "1"));
      out.checks.push_back(make_check(pre + "n-equivariant/contains-contraction", inputs, in_span(homs, contraction),
                                      mat_str(contraction), "span of the N-equivariant maps"));
      const auto wh = n_equivariant_weighted_homs(n, x);
      weighted[std::to_string(n)] = wh.size();
      out.checks.push_back(make_check(pre + "n-h-equivariant/dimension", inputs, wh.size() == 1,
                                      std::to_string(wh.size()), "1"));
      out.checks.push_back(make_check(pre + "n-h-equivariant/spanned-by-contraction", inputs,
                                      wh.size() == 1 && in_span(wh, contraction), mat_str(contraction),
                                      "span of the N,H-equivariant maps"));
    }

    if (n <= std::min(max_n, 5)) {
      for (int i = 0; i < 2; ++i) {
        const Jet j = random_jet(rng, 2 * n, n - 1, x);
        const FiberOp op = phi_apply(n, j);
        out.checks.push_back(make_check(pre + "symbol=projection/" + tag("case", i), j.to_string(),
                                        op.coeffs.back() == j.coeff(0), op.coeffs.back().to_string(),
                                        j.coeff(0).to_string()));
      }
    }
    if (n <= n_phi) {
      const RatFunc f(rng.poly(2 * n + 2));
      const RatFunc g(rng.poly(3));
      const RatFunc shifted =
          f + RatFunc(Poly::linear(Rational(1), -x.coordinate()).pow(static_cast<unsigned>(n))) * g;
      const FiberOp a = phi_of_section(n, f, x);
      const FiberOp b = phi_of_section(n, shifted, x);
      out.checks.push_back(make_check(pre + "well-defined", f.to_string() + "|" + g.to_string(), a == b, a.to_string(),
                                      b.to_string()));
      const Matrix<Rational> via_jets = phi_matrix_via_jets(n, x);
      const Matrix<Rational> via_contraction = phi_matrix_via_contraction(n, x, w);
      out.checks.push_back(make_check(pre + "constructions-agree", inputs, via_jets == via_contraction,
                                      mat_str(via_jets), mat_str(via_contraction)));
      const Mobius t = mobius_keeping_affine(rng, x);
      for (int i = 0; i < n; ++i) {
        std::vector<Rational> c(static_cast<std::size_t>(n));
        c[static_cast<std::size_t>(i)] = Rational(1);
        const Jet j(2 * n, n - 1, x, c);
        const FiberOp lhs = conjugate_fiber(phi_apply(n, j), t);
        const FiberOp rhs = phi_apply(n, jet_transition(j, t));
        out.checks.push_back(make_check(pre + "glues/" + tag("e", i), j.to_string() + "|" + t.to_string(), lhs == rhs,
                                        lhs.to_string(), rhs.to_string()));
      }
    }
  }
  out.notes["n_equivariant_dimension"] = dims;
  out.notes["n_h_equivariant_dimension"] = weighted;
  return out;
}

SuiteResult suite_casimir(const std::vector<int>& weights, int tensors, std::uint64_t seed) {
  SuiteResult out;
  Rng rng(seed);
  const SymTensor2 c = casimir_tensor();
  nlohmann::ordered_json scalars = nlohmann::ordered_json::object();
  for (int k : weights) {
    const std::string pre = "casimir/" + tag("k", k, 0) + "/";
    try {
      const Rational mu = casimir_scalar(k);
      scalars[std::to_string(k)] = mu.to_string();
      out.checks.push_back(make_check(pre + "scalar", std::to_string(k), true));
      // mu_k / mu_2 = k(k+2)/8 with mu_2 = 4.
      const Rational expected = Rational(4) * Rational(k * (k + 2), 8);
      out.checks.push_back(make_check(pre + "ratio", std::to_string(k), mu == expected, mu.to_string(),
                                      expected.to_string()));
    } catch (const Error& e) {
      out.checks.push_back(make_check(pre + "scalar", std::to_string(k), false, e.what(), "scalar"));
    }
  }
  for (const VectorField& q : {VectorField::e(), VectorField::h(), VectorField::f()}) {
    const Matrix<Rational> ad = adjoint_action(q, c);
    out.checks.push_back(make_check("casimir/invariant/" + q.to_string(), q.to_string(), ad.is_zero(), mat_str(ad), "0"));
  }
  for (int i = 0; i < tensors; ++i) {
    Matrix<Rational> s(3, 3);
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = a; b < 3; ++b) {
        s(a, b) = rng.rational();
        s(b, a) = s(a, b);
      }
    }
    const int k = weights.empty() ? 2 : weights[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(weights.size()) - 1))];
    const SymTensor2 p = polarization_decomposition(s);
    const SymTensor2 d = diagonal_decomposition(s);
    const std::string pre = "casimir/decomposition/" + tag("tensor", i) + "/";
    out.checks.push_back(make_check(pre + "same-tensor", mat_str(s), p == d && p.matrix() == s, mat_str(p.matrix()),
                                    mat_str(d.matrix())));
    for (int e = 0; e <= 4; ++e) {
      const RatFunc f(Poly::monomial(Rational(1), e));
      const RatFunc lhs = second_order_lie(p, f, k);
      const RatFunc rhs = second_order_lie(d, f, k);
      out.checks.push_back(make_check(pre + "same-operator/z^" + std::to_string(e), mat_str(s) + "|" + std::to_string(k),
                                      lhs == rhs, lhs.to_string(), rhs.to_string()));
    }
  }
  for (int i = 0; i < tensors; ++i) {
    const VectorField a(rng.poly(2));
    const VectorField b(rng.poly(2));
    const VectorField cc(rng.poly(2));
    const VectorField jac = bracket(a, bracket(b, cc)) + bracket(b, bracket(cc, a)) + bracket(cc, bracket(a, b));
    out.checks.push_back(make_check("casimir/jacobi/" + tag("case", i), a.to_string() + "|" + b.to_string() + "|" +
                                        cc.to_string(), jac == VectorField(Poly()), jac.to_string(), "0"));
    const Mobius t = rng.mobius();
    const SymTensor2 moved = transport_tensor(t, c);
    out.checks.push_back(make_check("casimir/sl2-invariant/" + tag("map", i), t.to_string(), moved == c,
                                    mat_str(moved.matrix()), mat_str(c.matrix())));
  }
  const Matrix<Rational> from_jets = casimir_from_jets();
  out.checks.push_back(make_check("casimir/jets=fields", "", from_jets == c.matrix(), mat_str(from_jets),
                                  mat_str(c.matrix())));
  out.notes["scalars"] = scalars;
  out.notes["contraction_bracket_scale"] = contraction_bracket_scale().to_string();
  return out;
}

SuiteResult suite_atlas(const Atlas& atlas, int max_n, int k) {
  SuiteResult out;
  const std::string pre = "atlas/" + (atlas.name.empty() ? std::string("unnamed") : atlas.name) + "/";
  const AtlasValidation v = validate_atlas(atlas);
  out.checks.insert(out.checks.end(), v.checks.begin(), v.checks.end());
  nlohmann::ordered_json obstructions = nlohmann::ordered_json::array();
  for (const auto& o : v.obstructions) {
    obstructions.push_back({{"triple", o.triple.label()}, {"product", o.product}, {"declared", o.declared}});
  }
  out.notes["lift_obstructions"] = obstructions;
  out.notes["valid"] = v.valid();

  for (int n = 1; n <= max_n; ++n) {
    const auto f = flat_frame_check(atlas, n);
    out.checks.insert(out.checks.end(), f.begin(), f.end());
    const auto t = transport_check(atlas, n);
    out.checks.insert(out.checks.end(), t.begin(), t.end());
  }
  for (int n = 0; n <= std::min(max_n, 4); ++n) {
    const auto b = global_bol_check(atlas, n);
    out.checks.insert(out.checks.end(), b.begin(), b.end());
    // Wrong weights (n, -n): d^(n+1) then picks up the factor (cz+d)^2, so it
    // glues exactly when c = 0 and d = +-1.
    for (const auto& tr : atlas.transitions) {
      if (!tr.determinant().is_one()) continue;
      const Mobius m = tr.mobius();
      const DiffOp op = DiffOp::derivative_power(n + 1, n, -n);
      const bool glues = conjugate(op, m) == op;
      const bool predicted = m.c().is_zero() && (m.d() * m.d()).is_one();
      out.checks.push_back(make_check(pre + "bol-control/" + tag("n", n) + "/" + tr.label(), m.to_string(),
                                      glues == predicted, glues ? "glues" : "fails",
                                      predicted ? "glues" : "fails"));
    }
  }
  for (int weight : std::vector<int>{0, k}) {
    const auto cs = casimir_surface_check(atlas, weight);
    out.checks.insert(out.checks.end(), cs.begin(), cs.end());
    if (weight == k) break;
  }
  for (int n = 1; n <= std::min(max_n, 3); ++n) {
    const auto p = phi_surface_check(atlas, n, true);
    out.checks.insert(out.checks.end(), p.begin(), p.end());
    const auto control = phi_surface_check(atlas, n, false);
    bool glue_ok = true;
    bool symbol_broken = false;
    for (const auto& c : control) {
      if (c.id.find("/glues/") != std::string::npos) glue_ok = glue_ok && c.pass;
      if (c.id.find("/symbol/") != std::string::npos) symbol_broken = symbol_broken || !c.pass;
    }
    out.checks.push_back(make_check(pre + "phi-control/" + tag("n", n), std::to_string(n), glue_ok && symbol_broken,
                                    std::string(glue_ok ? "glues" : "does not glue") +
                                        (symbol_broken ? ", symbol condition fails" : ", symbol condition holds"),
                                    "glues, symbol condition fails"));
  }
  return out;
}

VerificationReport run_verify(const std::string& suite, const VerifyParams& params) {
  if (std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end()) {
    throw Error(ErrorKind::UnknownSuite, "unknown suite '" + suite + "'");
  }
  const bool all = suite == "all";
  auto cap = [&](int dflt) { return params.n ? std::min(*params.n, dflt) : dflt; };
  const int n_split = params.n.value_or(6);
  const int n_cmz = params.n.value_or(5);
  const int n_bol = cap(5);
  const int n_phi = params.n.value_or(6);
  const int n_atlas = cap(5);
  std::vector<int> weights;
  if (params.k) {
    weights = {*params.k};
  } else {
    for (int k = -4; k <= 8; ++k) weights.push_back(k);
  }
  const int atlas_k = params.k.value_or(2);

  std::vector<Atlas> atlases;
  if (all || suite == "atlas") {
    if (params.atlas_paths.empty()) {
      atlases = builtin_atlases();
    } else {
      for (const auto& p : params.atlas_paths) atlases.push_back(load_atlas(p));
    }
  }

  // Independent suites run concurrently; the report is sorted afterwards.
  std::vector<std::pair<std::string, std::future<SuiteResult>>> jobs;
  auto launch = [&](const std::string& name, std::function<SuiteResult()> fn) {
    jobs.emplace_back(name, std::async(std::launch::async, std::move(fn)));
  };
  const std::uint64_t seed = params.seed;
  if (all || suite == "splitting") launch("splitting", [=] { return suite_splitting(n_split, std::max(10, n_split), 200, seed); });
  if (all || suite == "equivariance-cmz") launch("equivariance-cmz", [=] { return suite_cmz(n_cmz, 20, seed); });
  if (all || suite == "bol") launch("bol", [=] { return suite_bol(n_bol, 20, seed); });
  if (all || suite == "phi") launch("phi", [=] { return suite_phi(n_phi, seed); });
  if (all || suite == "casimir") launch("casimir", [=] { return suite_casimir(weights, 10, seed); });
  for (const auto& a : atlases) {
    launch("atlas:" + a.name, [=] { return suite_atlas(a, n_atlas, atlas_k); });
  }

  VerificationReport report;
  report.suite = suite;
  report.seed = seed;
  report.params["n"] = params.n ? nlohmann::ordered_json(*params.n) : nlohmann::ordered_json(nullptr);
  report.params["k"] = params.k ? nlohmann::ordered_json(*params.k) : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json names = nlohmann::ordered_json::array();
  for (const auto& a : atlases) names.push_back(a.name);
  report.params["atlases"] = names;

  SuiteResult merged;
  for (auto& [name, fut] : jobs) append(merged, fut.get(), name);
  report.checks = std::move(merged.checks);
  report.notes = std::move(merged.notes);
  report.normalize();
  return report;
}

}  // namespace jetline
