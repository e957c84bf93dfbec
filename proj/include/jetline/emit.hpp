#pragma once

#include <string>

#include "json.hpp"

namespace jetline {

/// JSON description of an operator: {"kind", "n", "coefficients": [[i, num, den], ...],
/// "weights": [a, b], "rendered"}. For cmz, i indexes the derivative of f in
/// sum_i c_i f^(i) d^(n-i); for bol, i is the order of d^i.
/// Throws UnknownOperatorKind, or IndexOutOfRange for n < 1 (cmz) / n < 0 (bol).
nlohmann::ordered_json operator_json(const std::string& kind, int n);

/// LaTeX rendering (presentation only).
std::string operator_latex(const std::string& kind, int n);

/// format is "json" or "latex"; throws UnknownFormat otherwise.
std::string emit_operator(const std::string& kind, int n, const std::string& format);

}  // namespace jetline
