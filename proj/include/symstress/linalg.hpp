#pragma once

#include "symstress/scalar.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

namespace symstress {

template <class T> using Vec = std::vector<T>;

// Dense row-major matrix. Used for both exact and floating scalars.
template <class T> class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Vec<T> row(std::size_t r) const {
    return Vec<T>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

template <class T> Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template <class T> Vec<T> operator*(const Matrix<T>& a, const Vec<T>& x) {
  Vec<T> y(a.rows(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!is_zero(a(i, k))) y[i] += a(i, k) * x[k];
  return y;
}

// x^T A
template <class T> Vec<T> left_multiply(const Vec<T>& x, const Matrix<T>& a) {
  Vec<T> y(a.cols(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t k = 0; k < a.cols(); ++k) y[k] += x[i] * a(i, k);
  }
  return y;
}

template <class T> T dot(const Vec<T>& a, const Vec<T>& b) {
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class T> double norm2(const Vec<T>& a) {
  double s = 0;
  for (const auto& v : a) {
    double d = as_double(v);
    s += d * d;
  }
  return std::sqrt(s);
}

template <class T> double norm_inf(const Vec<T>& a) {
  double s = 0;
  for (const auto& v : a) s = std::max(s, std::abs(as_double(v)));
  return s;
}

Matrix<double> to_double(const Matrix<Rational>& a);
Eigen::MatrixXd to_eigen(const Matrix<double>& a);

// Kernel basis and rank. Floating mode treats singular values below
// rel_tol * sigma_max as zero; rational mode is exact and ignores rel_tol.
template <class T> struct NullSpace {
  std::vector<Vec<T>> basis;
  std::size_t rank = 0;
  double threshold = 0;  // absolute singular-value cut (float mode only)
};

NullSpace<Rational> null_space(const Matrix<Rational>& a, double rel_tol = 0);
NullSpace<double> null_space(const Matrix<double>& a, double rel_tol);

inline NullSpace<Rational> left_null_space(const Matrix<Rational>& a, double rel_tol = 0) {
  return null_space(a.transpose(), rel_tol);
}
inline NullSpace<double> left_null_space(const Matrix<double>& a, double rel_tol) {
  return null_space(a.transpose(), rel_tol);
}

// Exact rank by fraction-free (Bareiss) elimination on an integer scaling of a.
std::size_t rank_bareiss(const Matrix<Rational>& a);
std::size_t rank(const Matrix<Rational>& a, double rel_tol = 0);
std::size_t rank(const Matrix<double>& a, double rel_tol);

// Determinant of a square rational matrix (Bareiss).
Rational determinant(const Matrix<Rational>& a);

// Some solution of a x = b, or nullopt when inconsistent.
std::optional<Vec<Rational>> solve(const Matrix<Rational>& a, const Vec<Rational>& b);
// Least-squares solution; residual written to *residual when non-null.
Vec<double> solve_least_squares(const Matrix<double>& a, const Vec<double>& b, double* residual = nullptr);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix<Rational>& a);

// Scale v to a primitive integer vector with positive first non-zero entry.
void make_primitive(Vec<Rational>& v);

// Incrementally maintained row space (exact), used for subspace sums.
class RowSpace {
public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}
  // Returns true when v enlarged the space.
  bool add(Vec<Rational> v);
  bool contains(Vec<Rational> v) const;
  std::size_t dimension() const { return rows_.size(); }
  std::vector<Vec<Rational>> basis() const;

private:
  Vec<Rational> reduce(Vec<Rational> v) const;
  std::size_t dim_;
  std::vector<Vec<Rational>> rows_;   // echelon rows, leading entry 1
  std::vector<std::size_t> pivots_;
};

}  // namespace symstress
