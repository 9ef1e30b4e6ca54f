#pragma once

#include <string>
#include <vector>

#include "latred/euclidean.hpp"
#include "latred/filtration.hpp"
#include "latred/matrix.hpp"
#include "latred/numbers.hpp"
#include "latred/rational_function.hpp"
#include "latred/ring.hpp"

namespace latred::latff {

// Volume space (F_q[t]^n, S). S is stored by the rows b_1..b_n of an R-basis,
// R = {f : deg f <= 0}; the JSON form lists the b_i as columns.
class VolumeSpace {
 public:
  VolumeSpace(const FiniteField& F, Matrix<FqRational> basis_rows);
  static VolumeSpace standard(const FiniteField& F, int n);
  static VolumeSpace diagonal(const FiniteField& F, const std::vector<long>& r);  // b_i = t^-r_i e_i

  const FiniteField& field() const { return *F_; }
  int n() const { return static_cast<int>(basis_.rows()); }
  const Matrix<FqRational>& basis() const { return basis_; }
  // Coordinates of vectors in the b-basis are v * coords().
  const Matrix<FqRational>& coords() const { return inv_; }
  // q S for a scalar q.
  VolumeSpace scaled(const FqRational& q) const;
  // S transported by phi in GL_n(F_q(t)): b_i -> b_i phi.
  VolumeSpace transformed(const Matrix<FqRational>& phi) const;

 private:
  const FiniteField* F_;
  Matrix<FqRational> basis_;
  Matrix<FqRational> inv_;
};

// Saturated summand of F_q[t]^n in HNF (rows).
class FFSummand {
 public:
  FFSummand() = default;
  FFSummand(const FiniteField& F, const Matrix<FqPoly>& rows);
  static FFSummand zero(const FiniteField& F, int n);
  static FFSummand full(const FiniteField& F, int n);
  static FFSummand from_hnf(Matrix<FqPoly> basis) {
    FFSummand w;
    w.basis_ = std::move(basis);
    return w;
  }

  int rank() const { return static_cast<int>(basis_.rows()); }
  int ambient() const { return static_cast<int>(basis_.cols()); }
  const Matrix<FqPoly>& basis() const { return basis_; }
  std::string key() const;
  friend bool operator==(const FFSummand& a, const FFSummand& b) { return a.basis_ == b.basis_; }

 private:
  Matrix<FqPoly> basis_;
};

PolyRing poly_ring(const FiniteField& F);
FFSummand meet(const FFSummand& a, const FFSummand& b);
FFSummand join(const FFSummand& a, const FFSummand& b);
bool leq(const FFSummand& a, const FFSummand& b);

// Max over m x m minors of deg(minor) for the rows expressed in the b-basis.
// Rows may have rational entries; they must be independent.
long ff_logvol(const VolumeSpace& vs, const Matrix<FqRational>& rows);
long ff_logvol(const VolumeSpace& vs, const FFSummand& w);
long ff_logvol(const VolumeSpace& vs);  // of V itself

struct SubQuotient {
  VolumeSpace sub;              // on W, coordinates of W's basis
  VolumeSpace quot;             // on V/W, coordinates of `complement`
  Matrix<FqPoly> complement;    // rows completing W's basis to a basis of V
};
SubQuotient sub_quotient(const VolumeSpace& vs, const FFSummand& w);

// {v in F_q[t]^n : logvol<v> <= c} as an F_q-basis (polynomial vectors),
// in reduced echelon order over the coefficient coordinates.
std::vector<std::vector<FqPoly>> short_space(const VolumeSpace& vs, long c);

struct ShortVector {
  std::vector<FqPoly> v;
  long logvol;
};
ShortVector shortest_vector(const VolumeSpace& vs);

struct DiagonalBasis {
  Matrix<FqPoly> w;      // rows: F_q[t]-basis of V
  Matrix<FqRational> b;  // rows: R-basis of S
  std::vector<long> r;   // ascending, w_i = t^r_i b_i
};
DiagonalBasis diagonal_basis(const VolumeSpace& vs);

using Report = filtration::FiltrationReport<FFSummand, Rational>;
struct Invariants {
  std::vector<long> r;
  Report report;
};
Invariants ff_invariants_and_filtration(const VolumeSpace& vs);

// Minimal logvol of each rank 0..n (partial sums of r).
std::vector<long> ff_rank_minima(const VolumeSpace& vs);
// Exact c_W via the sub and quotient volume spaces.
long ff_c_value(const VolumeSpace& vs, const FFSummand& w);

// Brute force: every saturated rank-m summand with logvol <= bound, from the
// finite F_q-spaces of short vectors. Scale error when a space exceeds
// 2^kMaxBruteBits elements.
inline constexpr int kMaxBruteBits = 16;
std::vector<FFSummand> enumerate_summands(const VolumeSpace& vs, int m, long bound);

class FFOracle {
 public:
  using Handle = FFSummand;
  using Value = Rational;

  explicit FFOracle(VolumeSpace vs) : vs_(std::move(vs)), r1_(shortest_vector(vs_).logvol) {}
  int top_rank() const { return vs_.n(); }
  FFSummand zero() const { return FFSummand::zero(vs_.field(), vs_.n()); }
  FFSummand top() const { return FFSummand::full(vs_.field(), vs_.n()); }
  int rank(const FFSummand& w) const { return w.rank(); }
  Rational logvol(const FFSummand& w) const { return Rational(ff_logvol(vs_, w)); }
  std::vector<FFSummand> summands(int m, const Rational& bound) const {
    return enumerate_summands(vs_, m, floor_of(bound).get_si());
  }
  Rational start_bound(int m) const { return Rational(m * r1_); }
  bool leq(const FFSummand& a, const FFSummand& b) const { return latff::leq(a, b); }
  FFSummand meet(const FFSummand& a, const FFSummand& b) const { return latff::meet(a, b); }
  FFSummand join(const FFSummand& a, const FFSummand& b) const { return latff::join(a, b); }

 private:
  VolumeSpace vs_;
  long r1_;
};

}  // namespace latred::latff
