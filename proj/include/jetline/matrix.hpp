#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jetline/errors.hpp"

namespace jetline {

/// Dense row-major matrix over an exact field F. Only the handful of
/// operations the verification code needs: products, rank, RREF,
/// null space and inversion by Gauss-Jordan elimination.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, F(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  F& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::vector<F> column(std::size_t c) const {
    std::vector<F> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  void set_column(std::size_t c, const std::vector<F>& v) {
    for (std::size_t r = 0; r < rows_ && r < v.size(); ++r) (*this)(r, c) = v[r];
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const F& x = (*this)(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) = r(i, j) + x * o(k, j);
      }
    }
    return r;
  }
  Matrix operator+(const Matrix& o) const {
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = r.a_[i] + o.a_[i];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = r.a_[i] - o.a_[i];
    return r;
  }
  Matrix scaled(const F& s) const {
    Matrix r = *this;
    for (auto& x : r.a_) x = x * s;
    return r;
  }
  std::vector<F> apply(const std::vector<F>& v) const {
    if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
    std::vector<F> r(rows_, F(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] = r[i] + (*this)(i, j) * v[j];
    return r;
  }
  Matrix transposed() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }
  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  /// Reduced row echelon form together with the pivot columns.
  std::pair<Matrix, std::vector<std::size_t>> rref() const {
    Matrix m = *this;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t p = row;
      while (p < rows_ && m(p, col).is_zero()) ++p;
      if (p == rows_) continue;
      if (p != row)
        for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(row, j));
      const F inv = F(1) / m(row, col);
      for (std::size_t j = 0; j < cols_; ++j) m(row, j) = m(row, j) * inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == row || m(i, col).is_zero()) continue;
        const F f = m(i, col);
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = m(i, j) - f * m(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return {std::move(m), std::move(pivots)};
  }

  std::size_t rank() const { return rref().second.size(); }

  /// Basis of {x : A x = 0}.
  std::vector<std::vector<F>> null_space() const {
    auto [r, pivots] = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<F> x(cols_, F(0));
      x[free] = F(1);
      for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -r(i, free);
      basis.push_back(std::move(x));
    }
    return basis;
  }

  std::optional<Matrix> inverse() const {
    if (rows_ != cols_) return std::nullopt;
    Matrix aug(rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_ + i) = F(1);
    }
    auto [r, pivots] = aug.rref();
    if (pivots.size() < rows_ || pivots.back() >= cols_) return std::nullopt;
    Matrix inv(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = r(i, cols_ + j);
    return inv;
  }

  template <class ToString>
  std::string to_string(ToString&& fmt) const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += (i ? ", [" : "[");
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ", ";
        s += fmt((*this)(i, j));
      }
      s += "]";
    }
    return s + "]";
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> a_;
};

/// Column space of A equals column space of B (same ambient dimension).
template <class F>
bool same_column_space(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) return false;
  const std::size_t ra = a.rank();
  if (ra != b.rank()) return false;
  Matrix<F> joined(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) joined(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) joined(i, a.cols() + j) = b(i, j);
  }
  return joined.rank() == ra;
}

}  // namespace jetline
