#pragma once

#include <cstddef>
#include <vector>

#include "latred/error.hpp"
#include "latred/matrix.hpp"

namespace latred {

// Gaussian elimination over an exact field (see ring.hpp for Field objects).

template <class Field>
struct Echelon {
  Matrix<typename Field::Element> reduced;  // reduced row echelon form
  std::vector<std::size_t> pivots;          // pivot column of each nonzero row
};

template <class Field>
Echelon<Field> rref(const Field& K, Matrix<typename Field::Element> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && K.is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    typename Field::Element inv = K.one() / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || K.is_zero(m(i, c))) continue;
      typename Field::Element f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix<typename Field::Element> out = m.block(0, 0, r, m.cols());
  return {std::move(out), std::move(pivots)};
}

template <class Field>
std::size_t rank(const Field& K, const Matrix<typename Field::Element>& m) {
  return rref(K, m).pivots.size();
}

template <class Field>
typename Field::Element determinant(const Field& K, Matrix<typename Field::Element> m) {
  if (!m.square()) fail(ErrorKind::dimension, "determinant of a non-square matrix");
  auto det = K.one();
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && K.is_zero(m(p, c))) ++p;
    if (p == n) return K.zero();
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m(c, c);
    typename Field::Element inv = K.one() / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (K.is_zero(m(i, c))) continue;
      typename Field::Element f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

template <class Field>
Matrix<typename Field::Element> inverse(const Field& K, const Matrix<typename Field::Element>& m) {
  if (!m.square()) fail(ErrorKind::dimension, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<typename Field::Element> aug(n, 2 * n, K.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = K.one();
  }
  auto e = rref(K, std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) fail(ErrorKind::singularity, "matrix is singular");
  return e.reduced.block(0, n, n, n);
}

// Rows spanning {x : M x = 0}.
template <class Field>
Matrix<typename Field::Element> right_kernel(const Field& K, const Matrix<typename Field::Element>& m) {
  auto e = rref(K, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix<typename Field::Element> ker(0, m.cols(), K.zero());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<typename Field::Element> v(m.cols(), K.zero());
    v[f] = K.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    ker.append_row(v);
  }
  return ker;
}

// Rows spanning {y : y M = 0}.
template <class Field>
Matrix<typename Field::Element> left_kernel(const Field& K, const Matrix<typename Field::Element>& m) {
  return right_kernel(K, m.transpose());
}

// Y with Y * basis = x, basis of full row rank; fails if x is outside the row space.
template <class Field>
Matrix<typename Field::Element> solve_left(const Field& K, const Matrix<typename Field::Element>& x,
                                           const Matrix<typename Field::Element>& basis) {
  const std::size_t k = basis.rows();
  const std::size_t n = basis.cols();
  // Solve basis^T y^T = x^T column by column via an augmented system.
  Matrix<typename Field::Element> aug(n, k + x.rows(), K.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = basis(j, i);
    for (std::size_t j = 0; j < x.rows(); ++j) aug(i, k + j) = x(j, i);
  }
  auto e = rref(K, std::move(aug));
  Matrix<typename Field::Element> y(x.rows(), k, K.zero());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    std::size_t p = e.pivots[r];
    if (p >= k) fail(ErrorKind::rank_deficiency, "vector not in the span");
    for (std::size_t j = 0; j < x.rows(); ++j) y(j, p) = e.reduced(r, k + j);
  }
  if (e.pivots.size() < k) fail(ErrorKind::rank_deficiency, "basis rows are dependent");
  return y;
}

}  // namespace latred
