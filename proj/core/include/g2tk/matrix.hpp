#pragma once

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "g2tk/rational.hpp"

namespace g2tk {

// Dense matrix over an exact field (Rational or GaussianRational).  All
// elimination is plain Gaussian elimination over the fraction field; no
// pivoting heuristics are needed since arithmetic is exact.
template <typename T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Mat: negative dimension");
  }
  Mat(int rows, int cols, std::initializer_list<T> entries) : Mat(rows, cols) {
    if (static_cast<int>(entries.size()) != rows * cols)
      throw std::invalid_argument("Mat: initializer size mismatch");
    size_t k = 0;
    for (const T& e : entries) a_[k++] = e;
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  Mat operator+(const Mat& o) const {
    check_same(o);
    Mat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
  }
  Mat operator-(const Mat& o) const {
    check_same(o);
    Mat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
  }
  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat: product shape mismatch");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& x = (*this)(i, k);
        if (is_zero(x)) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
      }
    return r;
  }
  Mat operator*(const T& s) const {
    Mat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
    return r;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("Mat: apply shape mismatch");
    std::vector<T> r(rows_, T(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!is_zero((*this)(i, j))) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  Mat transpose() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  T trace() const {
    T t(0);
    for (int i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

  int rank() const {
    Mat m = *this;
    return m.row_reduce();
  }

  T det() const {
    if (rows_ != cols_) throw std::invalid_argument("Mat: det of non-square");
    Mat m = *this;
    T d(1);
    for (int col = 0, row = 0; col < cols_; ++col, ++row) {
      int piv = -1;
      for (int i = row; i < rows_; ++i)
        if (!is_zero(m(i, col))) {
          piv = i;
          break;
        }
      if (piv < 0) return T(0);
      if (piv != row) {
        m.swap_rows(piv, row);
        d = -d;
      }
      d *= m(row, col);
      T inv = T(1) / m(row, col);
      for (int j = col; j < cols_; ++j) m(row, j) *= inv;
      for (int i = row + 1; i < rows_; ++i) {
        if (is_zero(m(i, col))) continue;
        T f = m(i, col);
        for (int j = col; j < cols_; ++j) m(i, j) -= f * m(row, j);
      }
    }
    return d;
  }

  std::optional<Mat> inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("Mat: inverse of non-square");
    Mat aug(rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_ + i) = T(1);
    }
    if (aug.row_reduce() != rows_) return std::nullopt;
    Mat inv(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
    return inv;
  }

  // Solves (*this) x = rhs exactly.  Returns nullopt when inconsistent; free
  // variables (if any) are set to zero.
  std::optional<std::vector<T>> solve(const std::vector<T>& rhs) const {
    if (static_cast<int>(rhs.size()) != rows_) throw std::invalid_argument("Mat: solve shape mismatch");
    Mat aug(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_) = rhs[i];
    }
    std::vector<int> pivot_col;
    aug.row_reduce(&pivot_col, cols_);
    // Inconsistent iff some reduced row is (0 ... 0 | nonzero).
    for (int i = 0; i < rows_; ++i) {
      bool zero_row = true;
      for (int j = 0; j < cols_; ++j)
        if (!is_zero(aug(i, j))) {
          zero_row = false;
          break;
        }
      if (zero_row && !is_zero(aug(i, cols_))) return std::nullopt;
    }
    std::vector<T> x(cols_, T(0));
    for (size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = aug(static_cast<int>(r), cols_);
    return x;
  }

 private:
  void check_same(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat: shape mismatch");
  }
  void swap_rows(int i, int j) {
    for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }

  // In-place RREF.  Returns the rank; optionally records pivot columns and
  // limits elimination to the first `limit_cols` columns.
  int row_reduce(std::vector<int>* pivot_cols = nullptr, int limit_cols = -1) {
    int ncols = (limit_cols < 0) ? cols_ : limit_cols;
    int row = 0;
    for (int col = 0; col < ncols && row < rows_; ++col) {
      int piv = -1;
      for (int i = row; i < rows_; ++i)
        if (!is_zero((*this)(i, col))) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      swap_rows(piv, row);
      T inv = T(1) / (*this)(row, col);
      for (int j = col; j < cols_; ++j) (*this)(row, j) *= inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == row || is_zero((*this)(i, col))) continue;
        T f = (*this)(i, col);
        for (int j = col; j < cols_; ++j) (*this)(i, j) -= f * (*this)(row, j);
      }
      if (pivot_cols) pivot_cols->push_back(col);
      ++row;
    }
    return row;
  }

  int rows_, cols_;
  std::vector<T> a_;
};

using MatQ = Mat<Rational>;
using MatG = Mat<GaussianRational>;

// 2x2 helpers used by the lattice and Levi code.
inline MatQ adjugate2(const MatQ& m) {
  if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("adjugate2: need 2x2");
  MatQ a(2, 2);
  a(0, 0) = m(1, 1);
  a(0, 1) = -m(0, 1);
  a(1, 0) = -m(1, 0);
  a(1, 1) = m(0, 0);
  return a;
}

inline MatQ diag2(const Rational& x, const Rational& y) {
  MatQ m(2, 2);
  m(0, 0) = x;
  m(1, 1) = y;
  return m;
}

}  // namespace g2tk
