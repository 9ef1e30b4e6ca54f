#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "latred/error.hpp"

namespace latred {

// Dense row-major matrix. Entries carry their own ring context, so a matrix
// never needs a separate ring handle except to create zeros and ones.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) fail(ErrorKind::dimension, "matrix data size mismatch");
  }

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m;
    m.rows_ = rows.size();
    m.cols_ = cols;
    m.data_.reserve(m.rows_ * cols);
    for (const auto& r : rows) {
      if (r.size() != cols) fail(ErrorKind::dimension, "ragged matrix rows");
      m.data_.insert(m.data_.end(), r.begin(), r.end());
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }
  void set_row(std::size_t i, const std::vector<T>& r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
  }
  void set_col(std::size_t j, const std::vector<T>& c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  void append_row(const std::vector<T>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) fail(ErrorKind::dimension, "appended row has wrong length");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  Matrix transpose() const {
    Matrix t;
    t.rows_ = cols_;
    t.cols_ = rows_;
    t.data_.reserve(data_.size());
    for (std::size_t j = 0; j < cols_; ++j)
      for (std::size_t i = 0; i < rows_; ++i) t.data_.push_back((*this)(i, j));
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    std::vector<T> d;
    d.reserve(nr * nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) d.push_back((*this)(r0 + i, c0 + j));
    return Matrix(nr, nc, std::move(d));
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<U> d;
    d.reserve(data_.size());
    for (const auto& x : data_) d.push_back(f(x));
    return Matrix<U>(rows_, cols_, std::move(d));
  }

  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

// Product; `zero` seeds the accumulators so empty inner dimensions work.
template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b, const T& zero) {
  if (a.cols() != b.rows()) fail(ErrorKind::dimension, "matrix product shape mismatch");
  Matrix<T> c(a.rows(), b.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == zero) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) fail(ErrorKind::dimension, "matrix product shape mismatch");
  if (a.rows() == 0 || b.cols() == 0) return Matrix<T>(a.rows(), b.cols(), T());
  T zero = a.cols() ? a(0, 0) - a(0, 0) : T();
  return multiply(a, b, zero);
}

template <class T>
std::vector<T> row_times(const std::vector<T>& v, const Matrix<T>& m, const T& zero) {
  if (v.size() != m.rows()) fail(ErrorKind::dimension, "vector-matrix shape mismatch");
  std::vector<T> out(m.cols(), zero);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == zero) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[k] * m(k, j);
  }
  return out;
}

template <class T>
std::vector<T> times_col(const Matrix<T>& m, const std::vector<T>& v, const T& zero) {
  if (v.size() != m.cols()) fail(ErrorKind::dimension, "matrix-vector shape mismatch");
  std::vector<T> out(m.rows(), zero);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < v.size(); ++k) out[i] += m(i, k) * v[k];
  return out;
}

}  // namespace latred
