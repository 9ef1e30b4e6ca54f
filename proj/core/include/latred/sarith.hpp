#pragma once

#include <string>
#include <vector>

#include "latred/error.hpp"
#include "latred/euclidean.hpp"
#include "latred/latff.hpp"
#include "latred/latz.hpp"
#include "latred/linalg.hpp"
#include "latred/log_value.hpp"
#include "latred/matrix.hpp"
#include "latred/ring.hpp"
#include "latred/valuation.hpp"

namespace latred::sarith {

// Localized arithmetic over Z[T^-1] for Z = Z or F_q[t] (ring objects from
// ring.hpp). Z_T denotes the ring of fractions with denominators prime to T.

template <class R>
struct IntegralStructure {
  R ring;
  std::vector<typename R::Element> T;
  FMatrix<R> B;  // columns span B over Z_T
  int n() const { return static_cast<int>(B.rows()); }
};

// Saturated summand of Z[T^-1]^n. It is determined by its Q-span; the stored
// representative is the saturated integral HNF of that span.
template <class R>
struct LocSummand {
  RMatrix<R> basis;
  int rank() const { return static_cast<int>(basis.rows()); }
};

template <class R>
LocSummand<R> loc_summand(const R& ring, const FMatrix<R>& generators) {
  return {saturated_span_fractions(ring, generators)};
}

namespace detail {

template <class R>
typename R::Element normalized(const R& ring, const typename R::Element& z) {
  return z * ring.normalizer(z);
}

template <class R>
typename R::Element ring_pow(const R& ring, typename R::Element b, long e) {
  typename R::Element out = ring.one();
  for (long i = 0; i < e; ++i) out *= b;
  return out;
}

// Canonical Z-basis (rows) of the Z-module generated by fraction rows.
template <class R>
FMatrix<R> fraction_hnf(const R& ring, const FMatrix<R>& gens) {
  typename R::Element l = ring.one();
  for (const auto& x : gens.data()) l = ring.lcm(l, ring.denominator(x));
  typename R::Fraction lf = ring.embed(l);
  RMatrix<R> ints = to_integral(ring, gens.map([&](const typename R::Fraction& x) -> typename R::Fraction { return x * lf; }));
  RMatrix<R> h = hnf(ring, ints);
  return to_fractions(ring, h).map([&](const typename R::Fraction& x) -> typename R::Fraction { return x / lf; });
}

}  // namespace detail

// x in Z[T^-1]: denominator supported on T.
template <class R>
bool in_ring_away(const R& ring, const typename R::Fraction& x, const std::vector<typename R::Element>& T) {
  typename R::Element d = ring.denominator(x);
  return detail::normalized(ring, d) == prime_part(d, T);
}

// x in Z_T: denominator prime to T.
template <class R>
bool in_ring_at(const R& ring, const typename R::Fraction& x, const std::vector<typename R::Element>& T) {
  return prime_part(ring.denominator(x), T) == ring.one();
}

template <class R>
bool unit_away(const R& ring, const typename R::Fraction& x, const std::vector<typename R::Element>& T) {
  if (R::Field::is_zero(x)) return false;
  typename R::Element a = ring.numerator(x);
  return in_ring_away(ring, x, T) && detail::normalized(ring, a) == prime_part(a, T);
}

template <class R>
bool unit_at(const R& ring, const typename R::Fraction& x, const std::vector<typename R::Element>& T) {
  if (R::Field::is_zero(x)) return false;
  return in_ring_at(ring, x, T) && prime_part(ring.numerator(x), T) == ring.one();
}

template <class R>
bool matrix_in_gl_away(const R& ring, const FMatrix<R>& m, const std::vector<typename R::Element>& T) {
  for (const auto& x : m.data())
    if (!in_ring_away(ring, x, T)) return false;
  return unit_away(ring, determinant(ring.field(), m), T);
}

template <class R>
bool matrix_in_gl_at(const R& ring, const FMatrix<R>& m, const std::vector<typename R::Element>& T) {
  for (const auto& x : m.data())
    if (!in_ring_at(ring, x, T)) return false;
  return unit_at(ring, determinant(ring.field(), m), T);
}

// Z-basis (rows, canonical HNF) of the lattice V ∩ B, V = Z[T^-1]^n.
template <class R>
FMatrix<R> lattice_basis(const IntegralStructure<R>& S) {
  const R& ring = S.ring;
  const auto K = ring.field();
  const std::size_t n = S.B.rows();
  if (!S.B.square()) fail(ErrorKind::dimension, "integral structure needs n columns");
  check_primes(S.T);
  // Columns rescaled by Z_T-units so that only T-denominators remain; this
  // lattice agrees with B at every p in T.
  FMatrix<R> cols = S.B.transpose();
  for (std::size_t j = 0; j < n; ++j) {
    typename R::Element l = ring.one();
    for (std::size_t i = 0; i < n; ++i) l = ring.lcm(l, ring.denominator(cols(j, i)));
    typename R::Fraction u = ring.embed(ring.exact_div(l, prime_part(l, S.T)));
    for (std::size_t i = 0; i < n; ++i) cols(j, i) *= u;
  }
  FMatrix<R> inv;
  try {
    inv = inverse(K, cols);
  } catch (const MathError&) {
    fail(ErrorKind::rank_deficiency, "integral structure columns are dependent");
  }
  // D Z^n lies in B at every p in T, and D is a unit away from T.
  typename R::Element D = ring.one();
  for (const auto& p : S.T) {
    long worst = 0;
    for (const auto& x : inv.data())
      if (!K.is_zero(x)) worst = std::min(worst, valuation(x, p).value());
    D *= detail::ring_pow(ring, p, -worst);
  }
  FMatrix<R> gens = cols;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<typename R::Fraction> e(n, K.zero());
    e[i] = ring.embed(D);
    gens.append_row(e);
  }
  return detail::fraction_hnf(ring, gens);
}

// W ∩ B as a Z-basis (rows, canonical HNF).
template <class R>
FMatrix<R> intersect_integral(const LocSummand<R>& W, const IntegralStructure<R>& S) {
  const R& ring = S.ring;
  const auto K = ring.field();
  if (W.rank() == 0) return FMatrix<R>(0, S.B.rows(), K.zero());
  FMatrix<R> P = lattice_basis(S);
  FMatrix<R> in_p = multiply(to_fractions(ring, W.basis), inverse(K, P), K.zero());
  RMatrix<R> y = saturated_span_fractions(ring, in_p);
  return detail::fraction_hnf(ring, multiply(to_fractions(ring, y), P, K.zero()));
}

// Summand of the lattice V ∩ B corresponding to W, in the coordinates of
// lattice_basis(S).
template <class R>
RMatrix<R> lattice_summand(const LocSummand<R>& W, const IntegralStructure<R>& S, const FMatrix<R>& P) {
  const R& ring = S.ring;
  const auto K = ring.field();
  if (W.rank() == 0) return RMatrix<R>(0, S.B.rows(), ring.zero());
  return saturated_span_fractions(ring, multiply(to_fractions(ring, W.basis), inverse(K, P), K.zero()));
}

// Inverse map: a summand of V ∩ B (coordinates of P) to its Z[T^-1]-span.
template <class R>
LocSummand<R> localize(const R& ring, const RMatrix<R>& y, const FMatrix<R>& P) {
  if (y.rows() == 0) return {RMatrix<R>(0, P.cols(), ring.zero())};
  return loc_summand(ring, multiply(to_fractions(ring, y), P, ring.field().zero()));
}

template <class R>
struct Factorization {
  FMatrix<R> B;  // in GL_n(Z[T^-1])
  FMatrix<R> C;  // in GL_n(Z_T)
};

enum class Mode { GL, SL };

// A = B * C via the Smith form of a denominator-cleared A, splitting each
// elementary divisor into its T-part and the rest.
template <class R>
Factorization<R> factorize(const R& ring, const FMatrix<R>& A, const std::vector<typename R::Element>& T, Mode mode) {
  const auto K = ring.field();
  if (!A.square()) fail(ErrorKind::dimension, "factorize needs a square matrix");
  check_primes(T);
  const std::size_t n = A.rows();
  typename R::Fraction det = determinant(K, A);
  if (K.is_zero(det)) fail(ErrorKind::singularity, "matrix is singular");
  if (mode == Mode::SL && !(det == K.one())) fail(ErrorKind::determinant, "SL mode needs det = 1");
  typename R::Element l = ring.one();
  for (const auto& x : A.data()) l = ring.lcm(l, ring.denominator(x));
  typename R::Fraction lf = ring.embed(l);
  RMatrix<R> m = to_integral(ring, A.map([&](const typename R::Fraction& x) -> typename R::Fraction { return x * lf; }));
  auto snf = smith_normal_form(ring, m);
  typename R::Element lt = prime_part(l, T);
  typename R::Element lu = ring.exact_div(l, lt);
  FMatrix<R> left(n, n, K.zero()), right(n, n, K.zero());
  for (std::size_t i = 0; i < n; ++i) {
    typename R::Element d = snf.D(i, i);
    typename R::Element dt = prime_part(d, T);
    typename R::Element du = ring.exact_div(d, dt);
    left(i, i) = ring.embed(dt) / ring.embed(lt);
    right(i, i) = ring.embed(du) / ring.embed(lu);
  }
  Factorization<R> f{multiply(to_fractions(ring, snf.U), left, K.zero()),
                     multiply(right, to_fractions(ring, snf.V), K.zero())};
  if (mode == Mode::SL) {
    // det B is a unit of both rings, i.e. of Z itself; move it into C.
    typename R::Fraction u = determinant(K, f.B);
    for (std::size_t i = 0; i < n; ++i) {
      f.B(i, 0) /= u;
      f.C(0, i) *= u;
    }
  }
  return f;
}

// Factorization relative to conjugated subgroups: A = (G B' G^-1)(G C' G^-1)
// where G^-1 A G = B' C'.
template <class R>
Factorization<R> factorize_conjugated(const R& ring, const FMatrix<R>& A, const std::vector<typename R::Element>& T,
                                      Mode mode, const FMatrix<R>& G) {
  const auto K = ring.field();
  FMatrix<R> gi = inverse(K, G);
  auto f = factorize(ring, multiply(multiply(gi, A, K.zero()), G, K.zero()), T, mode);
  return {multiply(multiply(G, f.B, K.zero()), gi, K.zero()), multiply(multiply(G, f.C, K.zero()), gi, K.zero())};
}

using ZStructure = IntegralStructure<IntegerRing>;
using FStructure = IntegralStructure<PolyRing>;
using ZLocSummand = LocSummand<IntegerRing>;
using FLocSummand = LocSummand<PolyRing>;

// Volumes and c through the lattice V ∩ B.
LogValue loc_logvol(const ZLocSummand& W, const latz::InnerProduct& s, const ZStructure& B);
long loc_logvol(const FLocSummand& W, const latff::VolumeSpace& vs, const FStructure& B);
LogValue loc_c(const ZLocSummand& W, const latz::InnerProduct& s, const ZStructure& B);
long loc_c(const FLocSummand& W, const latff::VolumeSpace& vs, const FStructure& B);

// The form / volume space in the coordinates of lattice_basis(B).
latz::InnerProduct transported(const latz::InnerProduct& s, const Matrix<Rational>& P);
latff::VolumeSpace transported(const latff::VolumeSpace& vs, const Matrix<FqRational>& P);

}  // namespace latred::sarith
