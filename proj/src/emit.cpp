#include "jetline/emit.hpp"

#include "jetline/diffops.hpp"
#include "jetline/errors.hpp"

namespace jetline {

namespace {

void check_kind(const std::string& kind, int n) {
  if (kind == "cmz") {
    if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "cmz needs n >= 1");
  } else if (kind == "bol") {
    if (n < 0) throw Error(ErrorKind::IndexOutOfRange, "bol needs n >= 0");
  } else {
    throw Error(ErrorKind::UnknownOperatorKind, "unknown operator kind '" + kind + "' (expected cmz or bol)");
  }
}

std::string latex_rational(const Rational& r) {
  if (r.is_integer()) return r.to_string();
  const std::string sign = r.sign() < 0 ? "-" : "";
  const Rational a = r.sign() < 0 ? -r : r;
  return sign + "\\frac{" + a.numerator_string() + "}{" + a.denominator_string() + "}";
}

nlohmann::ordered_json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

std::string latex_derivative_of_f(int i) {
  if (i == 0) return "f";
  if (i <= 3) return "f" + std::string(static_cast<std::size_t>(i), '\'');
  return "f^{(" + std::to_string(i) + ")}";
}

std::string latex_partial(int j) {
  if (j == 0) return "";
  if (j == 1) return "\\partial";
  return "\\partial^{" + std::to_string(j) + "}";
}

}  // namespace

nlohmann::ordered_json operator_json(const std::string& kind, int n) {
  check_kind(kind, n);
  nlohmann::ordered_json j;
  j["kind"] = kind;
  j["n"] = n;
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  if (kind == "cmz") {
    for (int i = 0; i < n; ++i) {
      const Rational c = cmz_coefficient(n, i);
      coeffs.push_back(nlohmann::ordered_json::array(
          {i, integer_json(c.raw().get_num()), integer_json(c.raw().get_den())}));
    }
    j["coefficients"] = std::move(coeffs);
    j["weights"] = nlohmann::ordered_json::array({0, 0});
  } else {
    coeffs.push_back(nlohmann::ordered_json::array({n + 1, 1, 1}));
    j["coefficients"] = std::move(coeffs);
    j["weights"] = nlohmann::ordered_json::array({n, -n - 2});
  }
  j["rendered"] = operator_latex(kind, n);
  return j;
}

std::string operator_latex(const std::string& kind, int n) {
  check_kind(kind, n);
  if (kind == "bol") {
    return latex_partial(n + 1) + " \\colon \\mathcal{L}^{" + std::to_string(n) + "} \\to \\mathcal{L}^{" +
           std::to_string(-n - 2) + "}";
  }
  std::string out = "\\mathcal{D}_{" + std::to_string(n) + "}(f) = ";
  for (int i = 0; i < n; ++i) {
    const Rational c = cmz_coefficient(n, i);
    if (i > 0) out += c.sign() < 0 ? " - " : " + ";
    const Rational shown = (i > 0 && c.sign() < 0) ? -c : c;
    out += latex_rational(shown) + "\\, " + latex_derivative_of_f(i) + "\\, " + latex_partial(n - i);
  }
  return out;
}

std::string emit_operator(const std::string& kind, int n, const std::string& format) {
  if (format == "json") return operator_json(kind, n).dump(2) + "\n";
  if (format == "latex") return operator_latex(kind, n) + "\n";
  throw Error(ErrorKind::UnknownFormat, "unknown format '" + format + "' (expected json or latex)");
}

}  // namespace jetline
