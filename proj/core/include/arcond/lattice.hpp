#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "arcond/errors.hpp"
#include "arcond/rational.hpp"

namespace arcond {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0)) : r_(rows), c_(cols), a_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  void swap_rows(std::size_t i, std::size_t k) {
    for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    Matrix out(x.r_, y.c_);
    for (std::size_t i = 0; i < x.r_; ++i)
      for (std::size_t k = 0; k < x.c_; ++k)
        for (std::size_t j = 0; j < y.c_; ++j) out(i, j) = out(i, j) + x(i, k) * y(k, j);
    return out;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) { return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_; }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
};

using IntMatrix = Matrix<Integer>;

/// Kronecker product.
template <class T>
Matrix<T> kronecker(const Matrix<T>& x, const Matrix<T>& y) {
  Matrix<T> out(x.rows() * y.rows(), x.cols() * y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      for (std::size_t k = 0; k < y.rows(); ++k)
        for (std::size_t l = 0; l < y.cols(); ++l) out(i * y.rows() + k, j * y.cols() + l) = x(i, j) * y(k, l);
  return out;
}

/// Basis (as columns) of {x in Z^n : A x = 0}. Obtained from a unimodular
/// column reduction, so the basis spans a saturated sublattice.
IntMatrix integer_kernel(const IntMatrix& a);

/// Basis (as columns) of the right kernel over a field, from the reduced row echelon form.
template <class F>
Matrix<F> field_kernel(Matrix<F> a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && is_zero(a(piv, col))) ++piv;
    if (piv == m) continue;
    a.swap_rows(row, piv);
    const F inv = F(1) / a(row, col);
    for (std::size_t j = col; j < n; ++j) a(row, j) = inv * a(row, j);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || is_zero(a(i, col))) continue;
      const F t = a(i, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) = a(i, j) - t * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix<F> basis(n, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], k) = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -a(r, free_cols[k]);
  }
  return basis;
}

/// Determinant over a field by Gaussian elimination.
template <class F>
F det_field(Matrix<F> a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw ComputationError("determinant of a non-square matrix");
  F det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && is_zero(a(piv, k))) ++piv;
    if (piv == n) return F(0);
    if (piv != k) {
      a.swap_rows(piv, k);
      det = -det;
    }
    det = det * a(k, k);
    const F inv = F(1) / a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(a(i, k))) continue;
      const F t = a(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) a(i, j) = a(i, j) - t * a(k, j);
    }
  }
  return det;
}

/// Fraction-free determinant over an integral domain; exact_div(x, y) must return x/y
/// whenever y divides x.
template <class R>
R det_bareiss(Matrix<R> a, const std::function<R(const R&, const R&)>& exact_div) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw ComputationError("determinant of a non-square matrix");
  if (n == 0) return R(1);
  R prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a(k, k))) {
      std::size_t piv = k + 1;
      while (piv < n && is_zero(a(piv, k))) ++piv;
      if (piv == n) return R(0);
      a.swap_rows(piv, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
    prev = a(k, k);
  }
  R d = a(n - 1, n - 1);
  return negate ? -d : d;
}

}  // namespace arcond
