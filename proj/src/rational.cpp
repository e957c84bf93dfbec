#include "jetline/rational.hpp"

#include "jetline/errors.hpp"

namespace jetline {

std::string_view error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::PoleAtExpansionPoint: return "PoleAtExpansionPoint";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::ContractionOverflow: return "ContractionOverflow";
    case ErrorKind::PoleAtBasePoint: return "PoleAtBasePoint";
    case ErrorKind::BasePointAtInfinity: return "BasePointAtInfinity";
    case ErrorKind::OrderWeightMismatch: return "OrderWeightMismatch";
    case ErrorKind::BadOrder: return "BadOrder";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InconsistentPointCovector: return "InconsistentPointCovector";
    case ErrorKind::NotScalar: return "NotScalar";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::UnknownChart: return "UnknownChart";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::AtlasParseError: return "AtlasParseError";
    case ErrorKind::UnknownOperatorKind: return "UnknownOperatorKind";
    case ErrorKind::UnknownFormat: return "UnknownFormat";
  }
  return "Unknown";
}

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::ZeroDenominator, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

mpz_class parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorKind::AtlasParseError, "empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw Error(ErrorKind::AtlasParseError, "bad integer literal '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw Error(ErrorKind::AtlasParseError, "bad integer literal '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return mpz_class(s, 10);
}

}  // namespace

Rational Rational::from_strings(std::string_view num, std::string_view den) {
  mpz_class n = parse_integer(num);
  mpz_class d = parse_integer(den);
  if (d == 0) throw Error(ErrorKind::ZeroDenominator, "rational with zero denominator");
  return Rational(mpq_class(n, d));
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_strings(text, "1");
  return from_strings(text.substr(0, slash), text.substr(slash + 1));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::ZeroDenominator, "division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw Error(ErrorKind::ZeroDenominator, "zero to a negative power");
    return Rational(1) / pow(-e);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(mpq_class(n, d));
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(mpq_class(f));
}

Rational binomial(long top, long k) {
  if (k < 0) return Rational(0);
  Rational r(1);
  for (long i = 0; i < k; ++i) r = r * Rational(top - i) / Rational(i + 1);
  return r;
}

}  // namespace jetline
