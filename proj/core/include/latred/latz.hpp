#pragma once

#include <string>
#include <vector>

#include "latred/euclidean.hpp"
#include "latred/filtration.hpp"
#include "latred/log_value.hpp"
#include "latred/matrix.hpp"
#include "latred/numbers.hpp"
#include "latred/ring.hpp"

namespace latred::latz {

inline constexpr int kMaxEnumerationRank = 6;

// Positive definite symmetric form on Q^n, as a Gram matrix.
class InnerProduct {
 public:
  explicit InnerProduct(Matrix<Rational> gram);
  int n() const { return static_cast<int>(gram_.rows()); }
  const Matrix<Rational>& gram() const { return gram_; }
  Rational operator()(const std::vector<Rational>& u, const std::vector<Rational>& v) const;

 private:
  Matrix<Rational> gram_;
};

// Saturated summand of Z^n, stored as its HNF basis (rows).
class ZSummand {
 public:
  ZSummand() = default;
  // Saturates the row span; rows must be independent.
  explicit ZSummand(const Matrix<Integer>& rows);
  static ZSummand zero(int n);
  static ZSummand full(int n);
  static ZSummand from_hnf(Matrix<Integer> basis);

  int rank() const { return static_cast<int>(basis_.rows()); }
  int ambient() const { return static_cast<int>(basis_.cols()); }
  const Matrix<Integer>& basis() const { return basis_; }
  std::string key() const;

  friend bool operator==(const ZSummand& a, const ZSummand& b) { return a.basis_ == b.basis_; }

 private:
  Matrix<Integer> basis_;
};

ZSummand meet(const ZSummand& a, const ZSummand& b);
ZSummand join(const ZSummand& a, const ZSummand& b);
bool leq(const ZSummand& a, const ZSummand& b);

// Squared covolume det(B s B^T) of the module spanned by independent rows B.
Rational gram_volume_sq(const InnerProduct& s, const Matrix<Rational>& rows);
Rational volume_sq(const InnerProduct& s, const ZSummand& w);
inline LogValue logvol(const InnerProduct& s, const ZSummand& w) { return LogValue::log_of(volume_sq(s, w), 2); }

// Nonzero v with s(v, v) <= bound, one of each pair +-v (first nonzero
// coordinate positive), sorted by (norm, lexicographic).
std::vector<std::vector<Integer>> short_vectors(const InnerProduct& s, const Rational& bound);
Rational shortest_norm_sq(const InnerProduct& s);

// All saturated summands with squared volume <= vol_sq_bound (any rank, or
// one rank). Complete for n <= 6.
std::vector<ZSummand> enumerate_summands(const InnerProduct& s, const Rational& vol_sq_bound);
std::vector<ZSummand> enumerate_summands(const InnerProduct& s, int rank, const Rational& vol_sq_bound);

// Minimal squared volume of each rank 0..n.
std::vector<Rational> rank_minima(const InnerProduct& s);

// Restriction to W in the coordinates of W's basis, and the quotient Z^n/W
// with the orthogonally projected form, in the coordinates of a complement
// basis of W.
InnerProduct restrict_to(const InnerProduct& s, const ZSummand& w);
struct Quotient {
  InnerProduct form;
  Matrix<Integer> complement;  // rows completing W's basis to a basis of Z^n
};
Quotient quotient(const InnerProduct& s, const ZSummand& w);

class ZOracle {
 public:
  using Handle = ZSummand;
  using Value = LogValue;

  explicit ZOracle(InnerProduct s) : s_(std::move(s)) {}
  int top_rank() const { return s_.n(); }
  ZSummand zero() const { return ZSummand::zero(s_.n()); }
  ZSummand top() const { return ZSummand::full(s_.n()); }
  int rank(const ZSummand& w) const { return w.rank(); }
  LogValue logvol(const ZSummand& w) const { return latz::logvol(s_, w); }
  std::vector<ZSummand> summands(int rank, const LogValue& bound) const;
  bool leq(const ZSummand& a, const ZSummand& b) const { return latz::leq(a, b); }
  ZSummand meet(const ZSummand& a, const ZSummand& b) const { return latz::meet(a, b); }
  ZSummand join(const ZSummand& a, const ZSummand& b) const { return latz::join(a, b); }

 private:
  InnerProduct s_;
};

using Report = filtration::FiltrationReport<ZSummand, LogValue>;

Report canonical_filtration(const InnerProduct& s);
// Exact c_W through the sub-lattice W and the quotient lattice Z^n/W.
LogValue c_value(const InnerProduct& s, const ZSummand& w);

// Affine-invariant distance || log(s1^-1/2 s2 s1^-1/2) ||_F (floating point).
double spd_distance(const InnerProduct& s1, const InnerProduct& s2);

}  // namespace latred::latz
