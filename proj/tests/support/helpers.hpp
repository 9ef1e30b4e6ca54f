#pragma once

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "latred/error.hpp"
#include "latred/matrix.hpp"
#include "latred/numbers.hpp"
#include "latred/poly.hpp"
#include "latred/rational_function.hpp"

namespace th {

using namespace latred;

inline Rational q(const std::string& s) { return parse_rational(s); }

inline Matrix<Integer> zmat(const std::vector<std::vector<long>>& rows, std::size_t cols = 0) {
  if (!rows.empty()) cols = rows[0].size();
  Matrix<Integer> m(rows.size(), cols, Integer(0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

inline Matrix<Rational> qmat(const std::vector<std::vector<std::string>>& rows) {
  Matrix<Rational> m(rows.size(), rows.empty() ? 0 : rows[0].size(), Rational(0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = q(rows[i][j]);
  return m;
}

inline Matrix<Rational> to_q(const Matrix<Integer>& z) {
  Matrix<Rational> m(z.rows(), z.cols(), Rational(0));
  for (std::size_t i = 0; i < z.rows(); ++i)
    for (std::size_t j = 0; j < z.cols(); ++j) m(i, j) = Rational(z(i, j));
  return m;
}

inline FqRational rf(const FiniteField& F, const std::string& s) { return parse_rational_function(F, s); }

inline FqPoly poly(const FiniteField& F, const std::string& s) {
  FqRational x = rf(F, s);
  if (!x.is_polynomial()) fail(ErrorKind::parse, "not a polynomial: " + s);
  return x.num();
}

inline Matrix<FqRational> fmat(const FiniteField& F, const std::vector<std::vector<std::string>>& rows) {
  Matrix<FqRational> m(rows.size(), rows.empty() ? 0 : rows[0].size(), FqRational::zero(F));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rf(F, rows[i][j]);
  return m;
}

inline Matrix<FqPoly> pmat(const FiniteField& F, const std::vector<std::vector<std::string>>& rows) {
  Matrix<FqPoly> m(rows.size(), rows.empty() ? 0 : rows[0].size(), FqPoly::zero(F));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = poly(F, rows[i][j]);
  return m;
}

inline Matrix<FqRational> to_rf(const FiniteField& F, const Matrix<FqPoly>& p) {
  Matrix<FqRational> m(p.rows(), p.cols(), FqRational::zero(F));
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) m(i, j) = FqRational(p(i, j));
  return m;
}

}  // namespace th

#define EXPECT_MATH_ERROR(stmt, k)                                    \
  do {                                                                \
    try {                                                             \
      stmt;                                                           \
      ADD_FAILURE() << "expected MathError(" #k ")";                  \
    } catch (const ::latred::MathError& e) {                          \
      EXPECT_EQ(e.kind(), ::latred::ErrorKind::k) << e.what();        \
    }                                                                 \
  } while (0)
