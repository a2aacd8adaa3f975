#pragma once

/**
 * @file matrix.hpp
 * @brief Dense exact linear algebra over a field scalar (Rational or
 *        QuadraticScalar).
 *
 * Everything downstream -- path-algebra quotients, intertwiner spaces,
 * K-theory pairings, endomorphism rings -- reduces to exact Gaussian
 * elimination, so this header concentrates on a small, dependable kit:
 * RREF with recorded pivots, rank, kernel bases, solve, and inverse.
 * No pivoting heuristics are needed: arithmetic is exact.
 */

#include "orbik/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace orbik {

template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}

  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
      throw InputError("matrix entry count does not match shape");
  }

  /// Row-major brace construction for tests and small fixtures.
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw InputError("ragged matrix literal");
      for (const auto& x : r) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!(x == T(0))) return false;
    return true;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!(at(i, j) == (i == j ? T(1) : T(0)))) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    x.require_same_shape(y, "+");
    Matrix m(x.rows_, x.cols_);
    for (std::size_t k = 0; k < x.data_.size(); ++k) m.data_[k] = x.data_[k] + y.data_[k];
    return m;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    x.require_same_shape(y, "-");
    Matrix m(x.rows_, x.cols_);
    for (std::size_t k = 0; k < x.data_.size(); ++k) m.data_[k] = x.data_[k] - y.data_[k];
    return m;
  }
  friend Matrix operator-(const Matrix& x) {
    Matrix m(x.rows_, x.cols_);
    for (std::size_t k = 0; k < x.data_.size(); ++k) m.data_[k] = -x.data_[k];
    return m;
  }
  friend Matrix operator*(const T& c, const Matrix& x) {
    Matrix m(x.rows_, x.cols_);
    for (std::size_t k = 0; k < x.data_.size(); ++k) m.data_[k] = c * x.data_[k];
    return m;
  }
  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_)
      throw CheckError("matrix product shape mismatch: " + x.shape_str() + " * " + y.shape_str());
    Matrix m(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const T& a = x.at(i, k);
        if (a == T(0)) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) m.at(i, j) += a * y.at(k, j);
      }
    return m;
  }
  friend std::vector<T> operator*(const Matrix& x, const std::vector<T>& v) {
    if (x.cols_ != v.size())
      throw CheckError("matrix-vector shape mismatch");
    std::vector<T> out(x.rows_, T(0));
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t j = 0; j < x.cols_; ++j) out[i] += x.at(i, j) * v[j];
    return out;
  }

  /// Side-by-side augmentation [this | right].
  Matrix hstack(const Matrix& right) const {
    if (rows_ != right.rows_) throw CheckError("hstack row mismatch");
    Matrix m(rows_, cols_ + right.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
      for (std::size_t j = 0; j < right.cols_; ++j) m.at(i, cols_ + j) = right.at(i, j);
    }
    return m;
  }

  /// Stacked augmentation [this / below].
  Matrix vstack(const Matrix& below) const {
    if (cols_ != below.cols_) throw CheckError("vstack column mismatch");
    Matrix m(rows_ + below.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < below.rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m.at(rows_ + i, j) = below.at(i, j);
    return m;
  }

  std::vector<T> row(std::size_t i) const {
    std::vector<T> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<T>>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw CheckError("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
  }

  /// In-place reduced row echelon form; returns the pivot column indices.
  std::vector<std::size_t> rref_in_place() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && at(p, c) == T(0)) ++p;
      if (p == rows_) continue;
      swap_rows(p, r);
      const T inv = T(1) / at(r, c);
      for (std::size_t j = c; j < cols_; ++j) at(r, j) = inv * at(r, j);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r) continue;
        const T f = at(i, c);
        if (f == T(0)) continue;
        for (std::size_t j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.rref_in_place().size();
  }

  /**
   * Basis of the right null space, returned as the columns of a matrix
   * of shape cols() x nullity.  Free variables are set to 1 one at a
   * time, so coordinates of a kernel vector can be read off directly at
   * the free column positions.
   */
  Matrix kernel_basis() const {
    Matrix m = *this;
    const std::vector<std::size_t> pivots = m.rref_in_place();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<T> v(cols_, T(0));
      v[f] = T(1);
      for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m.at(k, f);
      basis.push_back(std::move(v));
    }
    return from_columns(cols_, basis);
  }

  /// Non-pivot column indices, in the order kernel_basis emits vectors:
  /// the k-th kernel vector has a 1 at the k-th free column and 0 at the
  /// others, so these positions carry kernel-space coordinates.
  std::vector<std::size_t> free_columns() const {
    Matrix m = *this;
    const std::vector<std::size_t> pivots = m.rref_in_place();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> frees;
    for (std::size_t f = 0; f < cols_; ++f)
      if (!is_pivot[f]) frees.push_back(f);
    return frees;
  }

  /// Basis of the column space: the original columns at RREF pivot
  /// positions, as the columns of a rows() x rank matrix.
  Matrix column_space_basis() const {
    Matrix m = *this;
    const std::vector<std::size_t> pivots = m.rref_in_place();
    std::vector<std::vector<T>> cols;
    cols.reserve(pivots.size());
    for (auto p : pivots) cols.push_back(col(p));
    return from_columns(rows_, cols);
  }

  /// Solve A X = B columnwise; empty optional when any column is inconsistent.
  std::optional<Matrix> solve_matrix(const Matrix& b) const {
    if (b.rows() != rows_) throw CheckError("solve_matrix: row mismatch");
    std::vector<std::vector<T>> xcols;
    xcols.reserve(b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
      auto x = solve(b.col(j));
      if (!x) return std::nullopt;
      xcols.push_back(std::move(*x));
    }
    return from_columns(cols_, xcols);
  }

  /// Solve A x = b; empty optional when inconsistent (least-free solution).
  std::optional<std::vector<T>> solve(const std::vector<T>& b) const {
    if (b.size() != rows_) throw CheckError("solve: right-hand side length mismatch");
    Matrix aug = hstack(from_columns(rows_, {b}));
    const std::vector<std::size_t> pivots = aug.rref_in_place();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<T> x(cols_, T(0));
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(k, cols_);
    return x;
  }

  Matrix inverse() const {
    if (rows_ != cols_) throw CheckError("inverse of non-square matrix");
    Matrix aug = hstack(identity(rows_));
    const std::vector<std::size_t> pivots = aug.rref_in_place();
    // All pivots must land in the left block; one in the augmented half
    // means the original matrix is rank-deficient.
    if (pivots.size() != rows_ || pivots.back() >= rows_)
      throw CheckError("matrix not invertible");
    Matrix inv(rows_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < rows_; ++j) inv.at(i, j) = aug.at(i, rows_ + j);
    return inv;
  }

  /// Exact determinant by fraction-free-ish elimination on a copy.
  T determinant() const {
    if (rows_ != cols_) throw CheckError("determinant of non-square matrix");
    Matrix m = *this;
    T det(1);
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t p = c;
      while (p < rows_ && m.at(p, c) == T(0)) ++p;
      if (p == rows_) return T(0);
      if (p != c) {
        m.swap_rows(p, c);
        det = -det;
      }
      det = det * m.at(c, c);
      const T inv = T(1) / m.at(c, c);
      for (std::size_t i = c + 1; i < rows_; ++i) {
        const T f = inv * m.at(i, c);
        if (f == T(0)) continue;
        for (std::size_t j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(c, j);
      }
    }
    return det;
  }

  std::string shape_str() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
  }

  void require_same_shape(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw CheckError(std::string("matrix shape mismatch in '") + op + "': " +
                       shape_str() + " vs " + o.shape_str());
  }

  std::size_t rows_, cols_;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;

/// Dot product of equal-length coordinate vectors.
template <typename T>
T dot(const std::vector<T>& x, const std::vector<T>& y) {
  if (x.size() != y.size()) throw CheckError("dot: length mismatch");
  T s(0);
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

/// True when every entry of a rational matrix is an integer.
inline bool is_integer_matrix(const QMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_integer(m.at(i, j))) return false;
  return true;
}

}  // namespace orbik
