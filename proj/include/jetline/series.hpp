#pragma once

#include <cstddef>
#include <vector>

#include "jetline/errors.hpp"

namespace jetline {

/// Truncated power series sum_{j<=order} c_j w^j over an exact field F
/// (Rational, or RatFunc when the expansion point is symbolic).
template <class F>
class Series {
 public:
  explicit Series(int order) : c_(static_cast<std::size_t>(order) + 1, F(0)) {}
  Series(std::vector<F> coeffs, int order) : c_(std::move(coeffs)) {
    c_.resize(static_cast<std::size_t>(order) + 1, F(0));
  }

  static Series constant(const F& value, int order) {
    Series s(order);
    s.c_[0] = value;
    return s;
  }
  /// base + slope*w
  static Series linear(const F& base, const F& slope, int order) {
    Series s(order);
    s.c_[0] = base;
    if (order >= 1) s.c_[1] = slope;
    return s;
  }

  int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const F& operator[](int j) const { return c_[static_cast<std::size_t>(j)]; }
  const std::vector<F>& coeffs() const noexcept { return c_; }

  Series operator+(const Series& o) const {
    Series r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = r.c_[i] + o.c_[i];
    return r;
  }
  Series operator-(const Series& o) const {
    Series r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = r.c_[i] - o.c_[i];
    return r;
  }
  Series operator*(const Series& o) const {
    Series r(order());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < c_.size(); ++j) r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    }
    return r;
  }
  Series scaled(const F& s) const {
    Series r = *this;
    for (auto& x : r.c_) x = x * s;
    return r;
  }

  /// Quotient by a series with invertible constant term.
  Series operator/(const Series& d) const {
    if (d.c_[0].is_zero()) throw Error(ErrorKind::PoleAtExpansionPoint, "series divisor vanishes at the origin");
    const F inv0 = F(1) / d.c_[0];
    Series q(order());
    for (std::size_t j = 0; j < c_.size(); ++j) {
      F acc = c_[j];
      for (std::size_t i = 1; i <= j; ++i) acc = acc - d.c_[i] * q.c_[j - i];
      q.c_[j] = acc * inv0;
    }
    return q;
  }

  Series pow(long e) const {
    if (e < 0) return constant(F(1), order()) / pow(-e);
    Series result = constant(F(1), order());
    Series base = *this;
    while (e != 0) {
      if (e & 1L) result = result * base;
      e >>= 1;
      if (e != 0) base = base * base;
    }
    return result;
  }

 private:
  std::vector<F> c_;
};

}  // namespace jetline
