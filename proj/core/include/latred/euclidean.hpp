#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "latred/error.hpp"
#include "latred/linalg.hpp"
#include "latred/matrix.hpp"

namespace latred {

// Algorithms over a Euclidean ring R (IntegerRing or PolyRing).

template <class R>
using RMatrix = Matrix<typename R::Element>;

template <class R>
using FMatrix = Matrix<typename R::Fraction>;

template <class R>
FMatrix<R> to_fractions(const R& ring, const RMatrix<R>& m) {
  return m.map([&](const typename R::Element& x) { return ring.embed(x); });
}

// Multiplies each row by the lcm of its denominators.
template <class R>
RMatrix<R> clear_row_denominators(const R& ring, const FMatrix<R>& m) {
  RMatrix<R> out(m.rows(), m.cols(), ring.zero());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    typename R::Element l = ring.one();
    for (std::size_t j = 0; j < m.cols(); ++j) l = ring.lcm(l, ring.denominator(m(i, j)));
    for (std::size_t j = 0; j < m.cols(); ++j) {
      typename R::Fraction scaled = m(i, j) * ring.embed(l);
      out(i, j) = ring.numerator(scaled);
    }
  }
  return out;
}

// Converts a fraction matrix whose entries are all integral.
template <class R>
RMatrix<R> to_integral(const R& ring, const FMatrix<R>& m) {
  return m.map([&](const typename R::Fraction& x) {
    if (ring.denominator(x) != ring.one()) fail(ErrorKind::range, "entry is not integral");
    return ring.numerator(x);
  });
}

namespace detail {

template <class R>
void add_row_multiple(RMatrix<R>& m, std::size_t dst, std::size_t src, const typename R::Element& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}

}  // namespace detail

// Canonical basis of the row module: lower-triangular echelon form. Each row's
// pivot is its last nonzero entry, pivot columns increase down the rows,
// pivots are unit-normalized and entries below a pivot are reduced modulo it.
// Zero rows are dropped.
template <class R>
RMatrix<R> hnf(const R& ring, RMatrix<R> m) {
  const std::size_t n = m.cols();
  std::vector<std::size_t> active(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) active[i] = i;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col), col descending
  for (std::size_t cc = n; cc-- > 0;) {
    while (true) {
      std::size_t best = m.rows();
      for (auto i : active) {
        if (R::is_zero(m(i, cc))) continue;
        if (best == m.rows() || ring.smaller(m(i, cc), m(best, cc))) best = i;
      }
      if (best == m.rows()) break;
      bool others = false;
      for (auto i : active) {
        if (i == best || R::is_zero(m(i, cc))) continue;
        typename R::Element q = ring.divmod(m(i, cc), m(best, cc)).first;
        detail::add_row_multiple<R>(m, i, best, q);
        if (!R::is_zero(m(i, cc))) others = true;
      }
      if (!others) {
        pivots.emplace_back(best, cc);
        active.erase(std::find(active.begin(), active.end(), best));
        break;
      }
    }
  }
  std::reverse(pivots.begin(), pivots.end());
  RMatrix<R> h(0, n, ring.zero());
  for (auto [row, col] : pivots) {
    auto r = m.row(row);
    typename R::Element u = ring.normalizer(r[col]);
    for (auto& x : r) x *= u;
    h.append_row(r);
  }
  for (std::size_t j = 1; j < h.rows(); ++j) {
    for (std::size_t i = j; i-- > 0;) {
      std::size_t pc = pivots[i].second;
      typename R::Element q = ring.divmod(h(j, pc), h(i, pc)).first;
      if (!R::is_zero(q)) detail::add_row_multiple<R>(h, j, i, q);
    }
  }
  return h;
}

template <class R>
struct SmithForm {
  RMatrix<R> U;  // rows x rows, invertible over R
  RMatrix<R> D;  // rows x cols, diagonal, d1 | d2 | ...
  RMatrix<R> V;  // cols x cols, invertible over R
};

namespace detail {

// (g, s, u) with s a + u b = g, a gcd of a and b.
template <class R>
void xgcd(const R& ring, const typename R::Element& a, const typename R::Element& b, typename R::Element& g,
          typename R::Element& s, typename R::Element& u) {
  typename R::Element r0 = a, r1 = b, s0 = ring.one(), s1 = ring.zero(), u0 = ring.zero(), u1 = ring.one();
  while (!R::is_zero(r1)) {
    auto [q, r] = ring.divmod(r0, r1);
    typename R::Element s2 = s0 - q * s1, u2 = u0 - q * u1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  g = r0;
  s = s0;
  u = u0;
}

}  // namespace detail

// M = U * D * V. Elimination by 2x2 Bezout steps, which keeps intermediate
// entries from blowing up the way repeated remainder steps do.
template <class R>
SmithForm<R> smith_normal_form(const R& ring, const RMatrix<R>& input) {
  using E = typename R::Element;
  RMatrix<R> m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  RMatrix<R> U = RMatrix<R>::identity(rows, ring.zero(), ring.one());
  RMatrix<R> V = RMatrix<R>::identity(cols, ring.zero(), ring.one());

  // Rows t, i of m <- s row t + u row i, -y/g row t + x/g row i; U <- U * inverse.
  auto rows_bezout = [&](std::size_t t, std::size_t i) {
    const E x = m(t, t), y = m(i, t);
    if (R::is_zero(ring.divmod(y, x).second)) {
      const E q = ring.divmod(y, x).first;
      for (std::size_t j = 0; j < cols; ++j) m(i, j) -= q * m(t, j);
      for (std::size_t k = 0; k < rows; ++k) U(k, t) += q * U(k, i);
      return;
    }
    E g, s, u;
    detail::xgcd(ring, x, y, g, s, u);
    const E xg = ring.exact_div(x, g), yg = ring.exact_div(y, g);
    for (std::size_t j = 0; j < cols; ++j) {
      E a = m(t, j), b = m(i, j);
      m(t, j) = s * a + u * b;
      m(i, j) = xg * b - yg * a;
    }
    for (std::size_t k = 0; k < rows; ++k) {
      E a = U(k, t), b = U(k, i);
      U(k, t) = xg * a + yg * b;
      U(k, i) = s * b - u * a;
    }
  };
  // Columns t, j of m <- s col t + u col j, -y/g col t + x/g col j; V <- inverse * V.
  auto cols_bezout = [&](std::size_t t, std::size_t j) {
    const E x = m(t, t), y = m(t, j);
    if (R::is_zero(ring.divmod(y, x).second)) {
      const E q = ring.divmod(y, x).first;
      for (std::size_t i = 0; i < rows; ++i) m(i, j) -= q * m(i, t);
      for (std::size_t k = 0; k < cols; ++k) V(t, k) += q * V(j, k);
      return;
    }
    E g, s, u;
    detail::xgcd(ring, x, y, g, s, u);
    const E xg = ring.exact_div(x, g), yg = ring.exact_div(y, g);
    for (std::size_t i = 0; i < rows; ++i) {
      E a = m(i, t), b = m(i, j);
      m(i, t) = s * a + u * b;
      m(i, j) = xg * b - yg * a;
    }
    for (std::size_t k = 0; k < cols; ++k) {
      E a = V(t, k), b = V(j, k);
      V(t, k) = xg * a + yg * b;
      V(j, k) = s * b - u * a;
    }
  };

  const std::size_t k = std::min(rows, cols);
  for (std::size_t t = 0; t < k; ++t) {
    bool found = false;
    std::size_t bi = t, bj = t;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (R::is_zero(m(i, j))) continue;
        if (!found || ring.smaller(m(i, j), m(bi, bj))) {
          found = true;
          bi = i;
          bj = j;
        }
      }
    if (!found) break;
    m.swap_rows(t, bi);
    U.swap_cols(t, bi);
    m.swap_cols(t, bj);
    V.swap_rows(t, bj);
    while (true) {
      for (std::size_t i = t + 1; i < rows; ++i)
        if (!R::is_zero(m(i, t))) rows_bezout(t, i);
      for (std::size_t j = t + 1; j < cols; ++j)
        if (!R::is_zero(m(t, j))) cols_bezout(t, j);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) clean = clean && R::is_zero(m(i, t));
      if (!clean) continue;
      // Pivot must divide the rest of the block.
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < cols && !fixed; ++j) {
          if (R::is_zero(ring.divmod(m(i, j), m(t, t)).second)) continue;
          // row t += row i
          for (std::size_t c = 0; c < cols; ++c) m(t, c) += m(i, c);
          for (std::size_t r = 0; r < rows; ++r) U(r, i) -= U(r, t);
          fixed = true;
        }
      if (!fixed) break;
    }
    E u = ring.normalizer(m(t, t));
    if (u != ring.one()) {
      E ui = ring.unit_inverse(u);
      for (std::size_t j = 0; j < cols; ++j) m(t, j) *= u;
      for (std::size_t i = 0; i < rows; ++i) U(i, t) *= ui;
    }
  }
  return {std::move(U), std::move(m), std::move(V)};
}

// Basis of (Q-span of rows) ∩ R^n for independent rows, in HNF.
template <class R>
RMatrix<R> saturate(const R& ring, const RMatrix<R>& rows) {
  if (rows.rows() == 0) return RMatrix<R>(0, rows.cols(), ring.zero());
  auto snf = smith_normal_form(ring, rows);
  for (std::size_t i = 0; i < rows.rows(); ++i)
    if (R::is_zero(snf.D(i, i))) fail(ErrorKind::rank_deficiency, "saturate: rows are dependent");
  return hnf(ring, snf.V.block(0, 0, rows.rows(), rows.cols()));
}

// Saturation of the module generated by arbitrary rows.
template <class R>
RMatrix<R> saturated_span(const R& ring, const RMatrix<R>& gens) {
  return saturate(ring, hnf(ring, gens));
}

template <class R>
RMatrix<R> saturated_span_fractions(const R& ring, const FMatrix<R>& gens) {
  return saturated_span(ring, clear_row_denominators(ring, gens));
}

// Summand operations; arguments are saturated bases with the same column count.

template <class R>
RMatrix<R> stack(const RMatrix<R>& a, const RMatrix<R>& b) {
  RMatrix<R> s = a;
  for (std::size_t i = 0; i < b.rows(); ++i) s.append_row(b.row(i));
  return s;
}

template <class R>
RMatrix<R> summand_join(const R& ring, const RMatrix<R>& a, const RMatrix<R>& b) {
  return saturated_span(ring, stack<R>(a, b));
}

template <class R>
RMatrix<R> summand_meet(const R& ring, const RMatrix<R>& a, const RMatrix<R>& b) {
  const std::size_t n = a.cols();
  if (a.rows() == 0 || b.rows() == 0) return RMatrix<R>(0, n, ring.zero());
  auto K = ring.field();
  FMatrix<R> s = to_fractions(ring, stack<R>(a, b));
  FMatrix<R> ker = left_kernel(K, s);
  FMatrix<R> fa = to_fractions(ring, a);
  FMatrix<R> vecs(0, n, K.zero());
  for (std::size_t i = 0; i < ker.rows(); ++i) {
    auto full = ker.row(i);
    std::vector<typename R::Fraction> x(full.begin(), full.begin() + a.rows());
    vecs.append_row(row_times(x, fa, K.zero()));
  }
  return saturated_span_fractions(ring, vecs);
}

// a ⊆ b for saturated a.
template <class R>
bool summand_leq(const R& ring, const RMatrix<R>& a, const RMatrix<R>& b) {
  if (a.rows() > b.rows()) return false;
  if (a.rows() == 0) return true;
  auto K = ring.field();
  return rank(K, to_fractions(ring, stack<R>(a, b))) == b.rows();
}

template <class R>
typename R::Element ring_determinant(const R& ring, const RMatrix<R>& m) {
  auto d = determinant(ring.field(), to_fractions(ring, m));
  return ring.numerator(d);
}

}  // namespace latred
