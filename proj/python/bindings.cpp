// Python bindings. Rationals cross the boundary as fractions.Fraction (ints
// and "p/q" strings are accepted on input); forms and jets are coefficient
// lists; Mobius maps are 4-sequences (a, b, c, d).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jetline/atlas_io.hpp"
#include "jetline/diffops.hpp"
#include "jetline/emit.hpp"
#include "jetline/errors.hpp"
#include "jetline/jets.hpp"
#include "jetline/lie_casimir.hpp"
#include "jetline/verify.hpp"

namespace py = pybind11;
using namespace jetline;

namespace {

Rational to_rational(const py::handle& h) { return Rational::parse(py::str(h).cast<std::string>()); }

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::int_(py::str(r.numerator_string())), py::int_(py::str(r.denominator_string())));
}

std::vector<Rational> to_vector(const py::sequence& s) {
  std::vector<Rational> out;
  for (const auto& x : s) out.push_back(to_rational(x));
  return out;
}

py::list to_list(const std::vector<Rational>& v) {
  py::list out;
  for (const auto& x : v) out.append(to_fraction(x));
  return out;
}

Mobius to_mobius(const py::sequence& m) {
  if (py::len(m) != 4) throw Error(ErrorKind::DimensionMismatch, "a Mobius map is (a, b, c, d)");
  return Mobius(to_rational(m[0]), to_rational(m[1]), to_rational(m[2]), to_rational(m[3]));
}

BinaryForm to_form(const py::sequence& coeffs) {
  std::vector<Rational> c = to_vector(coeffs);
  const int n = static_cast<int>(c.size()) - 1;
  return BinaryForm(n, std::move(c));
}

PointP1 at(const py::handle& z) { return PointP1::affine(to_rational(z)); }

}  // namespace

PYBIND11_MODULE(_jetline, m) {
  m.doc() = "Exact jet-bundle computations over the projective line";

  static py::exception<Error> error(m, "JetlineError");
  static py::exception<AtlasParseError> parse_error(m, "AtlasParseError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const AtlasParseError& e) {
      py::object inst = py::reinterpret_borrow<py::object>(parse_error.ptr())(e.what());
      inst.attr("line") = e.line();
      inst.attr("column") = e.column();
      inst.attr("kind") = std::string(error_kind_name(e.kind()));
      PyErr_SetObject(parse_error.ptr(), inst.ptr());
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
      inst.attr("kind") = std::string(error_kind_name(e.kind()));
      PyErr_SetObject(error.ptr(), inst.ptr());
    }
  });

  m.def(
      "taylor_coeffs",
      [](const py::sequence& p, const py::handle& c, int order) {
        return to_list(taylor_coeffs(Poly(to_vector(p)), to_rational(c), order));
      },
      py::arg("poly"), py::arg("center"), py::arg("order"),
      "Taylor coefficients at center of the polynomial with the given coefficients (constant term first).");
  m.def(
      "ratfunc_taylor",
      [](const py::sequence& num, const py::sequence& den, const py::handle& c, int order) {
        return to_list(ratfunc_taylor(RatFunc(Poly(to_vector(num)), Poly(to_vector(den))), to_rational(c), order));
      },
      py::arg("num"), py::arg("den"), py::arg("center"), py::arg("order"));

  m.def(
      "sl2_act_form",
      [](const py::sequence& mat, const py::sequence& form) {
        return to_list(sl2_act_form(to_mobius(mat), to_form(form)).coeffs());
      },
      py::arg("matrix"), py::arg("form"), "Coefficient i is that of X^i Y^(n-i).");

  m.def(
      "eval_global",
      [](const py::sequence& form, const py::handle& p, int order) {
        return to_list(eval_global(to_form(form), at(p), order).coeffs());
      },
      py::arg("form"), py::arg("point"), py::arg("order"));
  m.def(
      "reconstruct",
      [](const py::sequence& jet, const py::handle& p) {
        const int n = static_cast<int>(py::len(jet)) - 1;
        return to_list(reconstruct(Jet(n, n, at(p), to_vector(jet))).coeffs());
      },
      py::arg("jet"), py::arg("point"));
  m.def(
      "split",
      [](const py::sequence& jet, const py::handle& p, int order) {
        const int n = static_cast<int>(py::len(jet)) - 1;
        return to_list(split(Jet(n, n, at(p), to_vector(jet)), order).coeffs());
      },
      py::arg("jet"), py::arg("point"), py::arg("order"));
  m.def(
      "bol_pointwise",
      [](int n, const py::sequence& jet, const py::handle& p) {
        return to_fraction(bol_pointwise(n, Jet(n, n + 1, at(p), to_vector(jet))));
      },
      py::arg("n"), py::arg("jet"), py::arg("point"));

  m.def("cmz_coefficient", [](int n, int i) { return to_fraction(cmz_coefficient(n, i)); }, py::arg("n"), py::arg("i"));
  m.def(
      "phi_apply",
      [](int n, const py::sequence& jet, const py::handle& p) {
        return to_list(phi_apply(n, Jet(2 * n, n - 1, at(p), to_vector(jet))).coeffs);
      },
      py::arg("n"), py::arg("jet"), py::arg("point"));
  m.def(
      "n_equivariant_dimension", [](int n) { return n_equivariant_homs(n).size(); }, py::arg("n"),
      "Dimension of the N-equivariant homs S^2n(V) -> S^(n-1)(V) killing v^n S^n(V).");
  m.def(
      "n_equivariant_weighted_dimension", [](int n) { return n_equivariant_weighted_homs(n).size(); },
      py::arg("n"));
  m.def("casimir_scalar", [](int k) { return to_fraction(casimir_scalar(k)); }, py::arg("k"));

  m.def("emit_operator", &emit_operator, py::arg("kind"), py::arg("n"), py::arg("format") = "json");

  m.def(
      "verify",
      [](const std::string& suite, std::optional<int> n, std::optional<int> k, std::uint64_t seed,
         const std::vector<std::string>& atlases, bool timestamp) {
        VerifyParams params;
        params.n = n;
        params.k = k;
        params.seed = seed;
        params.atlas_paths = atlases;
        VerificationReport report;
        {
          py::gil_scoped_release release;
          report = run_verify(suite, params);
        }
        return report.to_json(timestamp).dump(2);
      },
      py::arg("suite"), py::arg("n") = py::none(), py::arg("k") = py::none(), py::arg("seed") = 1,
      py::arg("atlases") = std::vector<std::string>{}, py::arg("timestamp") = false,
      "Run a verification suite and return the report as JSON text.");

  m.def(
      "describe_atlas", [](const std::string& path) { return describe_atlas_json(load_atlas(path)).dump(2); },
      py::arg("path"));
  m.def(
      "canonical_atlas", [](const std::string& text) { return emit_atlas(parse_atlas(text)); }, py::arg("text"),
      "Parse atlas text and re-emit it canonically.");
}
