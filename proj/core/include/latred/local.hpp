#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "latred/error.hpp"
#include "latred/finite_field.hpp"
#include "latred/matrix.hpp"
#include "latred/numbers.hpp"
#include "latred/rational_function.hpp"
#include "latred/ring.hpp"

namespace latred::local {

// Discrete valuation rings inside a field K, with a fixed uniformizer.
//   valuation(x)     x != 0
//   pi_pow(k)        uniformizer to any integer power
//   reduce(x, a)     canonical representative of the class x + pi^a O, any x in K
//   residue(x)       image in the residue field, x in O
//   lift(c)          fixed lift of a residue

// Z localized at p; uniformizer p.
struct PAdic {
  using Element = Rational;
  using Field = RationalField;

  Integer p;

  Field field() const { return {}; }
  long valuation(const Rational& x) const;
  Rational pi_pow(long k) const;
  Rational reduce(const Rational& x, long a) const;
  std::uint32_t residue_size() const;
  const FiniteField& residue_field() const;
  FiniteField::Elem residue(const Rational& x) const;
  Rational lift(FiniteField::Elem c) const { return Rational(c); }
  std::string name() const { return "Z_(" + p.get_str() + ")"; }
};

// The ring of f in F_q(t) with deg f <= 0; uniformizer 1/t.
struct DegreeLocal {
  using Element = FqRational;
  using Field = FqRationalField;

  const FiniteField* F;

  Field field() const { return {F}; }
  long valuation(const FqRational& x) const;
  FqRational pi_pow(long k) const { return FqRational::t_pow(*F, static_cast<int>(-k)); }
  FqRational reduce(const FqRational& x, long a) const;
  std::uint32_t residue_size() const { return F->order(); }
  const FiniteField& residue_field() const { return *F; }
  FiniteField::Elem residue(const FqRational& x) const;
  FqRational lift(FiniteField::Elem c) const { return FqRational(FqPoly::constant(*F, c)); }
  std::string name() const { return "O_inf"; }
};

// Polynomial part of a rational function.
FqPoly poly_part(const FqRational& x);

template <class L>
using LMatrix = Matrix<typename L::Element>;

template <class L>
long min_valuation(const L& O, const LMatrix<L>& m) {
  bool any = false;
  long best = 0;
  for (const auto& x : m.data()) {
    if (L::Field::is_zero(x)) continue;
    long v = O.valuation(x);
    if (!any || v < best) best = v;
    any = true;
  }
  if (!any) fail(ErrorKind::zero_argument, "matrix is zero");
  return best;
}

template <class L>
struct Saturation {
  LMatrix<L> basis;       // O-basis of (K-span of the rows) ∩ O^n
  LMatrix<L> complement;  // completes basis to an O-basis of O^n
};

// Rows must be independent over K.
template <class L>
Saturation<L> saturate_rows(const L& O, LMatrix<L> a) {
  using E = typename L::Element;
  const auto K = O.field();
  const std::size_t m = a.rows(), n = a.cols();
  // a_current = X * a_input * E; Y tracks E^-1 so that the input row space
  // is spanned by the first m rows of Y.
  LMatrix<L> Y = LMatrix<L>::identity(n, K.zero(), K.one());
  for (std::size_t t = 0; t < m; ++t) {
    std::size_t bj = n;
    long bv = 0;
    for (std::size_t j = t; j < n; ++j) {
      if (L::Field::is_zero(a(t, j))) continue;
      long v = O.valuation(a(t, j));
      if (bj == n || v < bv) {
        bj = j;
        bv = v;
      }
    }
    if (bj == n) fail(ErrorKind::rank_deficiency, "rows are dependent");
    a.swap_cols(t, bj);
    Y.swap_rows(t, bj);
    E inv = K.one() / a(t, t);
    for (std::size_t j = 0; j < n; ++j) a(t, j) *= inv;
    for (std::size_t j = t + 1; j < n; ++j) {
      if (L::Field::is_zero(a(t, j))) continue;
      E q = a(t, j);  // in O: the pivot had minimal valuation
      for (std::size_t i = 0; i < m; ++i) a(i, j) -= q * a(i, t);
      for (std::size_t k = 0; k < n; ++k) Y(t, k) += q * Y(j, k);
    }
    for (std::size_t i = t + 1; i < m; ++i) {
      if (L::Field::is_zero(a(i, t))) continue;
      E f = a(i, t);
      for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(t, j);
    }
  }
  return {Y.block(0, 0, m, n), Y.block(m, 0, n - m, n)};
}

// Canonical O-basis (columns) of the lattice generated by the columns of g,
// which must have full row rank: lower triangular, pivots pi^k, entries left
// of a pivot reduced modulo it.
template <class L>
LMatrix<L> column_hnf(const L& O, LMatrix<L> g) {
  using E = typename L::Element;
  const std::size_t n = g.rows(), k = g.cols();
  if (k < n) fail(ErrorKind::rank_deficiency, "fewer generators than the rank");
  std::vector<long> piv(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t bj = k;
    long bv = 0;
    for (std::size_t j = i; j < k; ++j) {
      if (L::Field::is_zero(g(i, j))) continue;
      long v = O.valuation(g(i, j));
      if (bj == k || v < bv) {
        bj = j;
        bv = v;
      }
    }
    if (bj == k) fail(ErrorKind::rank_deficiency, "generators do not span a full lattice");
    g.swap_cols(i, bj);
    E scale = O.pi_pow(bv) / g(i, i);
    for (std::size_t r = 0; r < n; ++r) g(r, i) *= scale;
    piv[i] = bv;
    for (std::size_t j = i + 1; j < k; ++j) {
      if (L::Field::is_zero(g(i, j))) continue;
      E q = g(i, j) / g(i, i);
      for (std::size_t r = i; r < n; ++r) g(r, j) -= q * g(r, i);
    }
  }
  LMatrix<L> h = g.block(0, 0, n, n);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      E x = h(i, j);
      E q = (x - O.reduce(x, piv[i])) / h(i, i);
      if (L::Field::is_zero(q)) continue;
      for (std::size_t r = i; r < n; ++r) h(r, j) -= q * h(r, i);
    }
  return h;
}

}  // namespace latred::local
