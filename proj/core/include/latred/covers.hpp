#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latred/building.hpp"
#include "latred/latff.hpp"
#include "latred/latz.hpp"
#include "latred/local.hpp"
#include "latred/log_value.hpp"
#include "latred/sarith.hpp"

namespace latred::covers {

// theta = base + log_part. The log part only appears for the localized
// integer preset 4n(R+1) with R = ln(prod T).
struct Threshold {
  Rational base = 0;
  LogValue log_part;
  std::string str() const;
  double to_double() const { return base.get_d() + log_part.to_double(); }
};

Threshold zero_threshold();
Threshold adjacent_threshold(int n);                                      // 4n
Threshold localized_threshold(int n, const std::vector<Integer>& T);      // 4n(1 + ln prod T)
Threshold localized_threshold(int n, const std::vector<FqPoly>& T);       // 4n(1 + sum deg)
Threshold raised(const Threshold& t, const Rational& extra);              // theta + extra

bool above(const LogValue& c, const Threshold& t);
bool above(const Rational& c, const Threshold& t);

using FVertex = building::Vertex<local::DegreeLocal>;

// Point of the symmetric space: an inner product, optionally paired with an
// integral structure.
struct ZPoint {
  latz::InnerProduct s;
  std::optional<sarith::ZStructure> B;
};

// Point of the degree-valuation building: a formal convex combination of
// mutually adjacent vertices, optionally paired with an integral structure.
struct FFPoint {
  const FiniteField* F = nullptr;
  std::vector<FVertex> vertices;
  std::vector<Rational> coeffs;
  std::optional<sarith::FStructure> B;
};

// Summands are saturated HNF row bases, of Z^n (resp. F_q[t]^n) or of the
// localized module.
struct ZMember {
  Matrix<Integer> w;
  LogValue c;
};
struct FFMember {
  Matrix<FqPoly> w;
  Rational c;
};

// Vertex <-> volume space: the columns of the vertex basis are the b_i.
latff::VolumeSpace volume_space(const FiniteField& F, const FVertex& v);
FVertex vertex_from_r(const FiniteField& F, const std::vector<long>& r);  // L = span t^-r_i e_i
FFPoint vertex_point(const FiniteField& F, const FVertex& v);
std::vector<long> vertex_invariants(const FiniteField& F, const FVertex& v);

// Checks coefficients (positive, sum 1) and pairwise adjacency.
void validate(const FFPoint& x);

inline constexpr int kMaxCoverRank = 4;

// Every W with c_W(x) > theta, ascending rank. Only members of the canonical
// filtrations of the vertices can have c_W > 0, so they are the candidates.
std::vector<ZMember> cover_membership(const ZPoint& x, const Threshold& theta);
std::vector<FFMember> cover_membership(const FFPoint& x, const Threshold& theta);

// c_W(x) for one summand (rows in the module's coordinates).
LogValue c_at(const ZPoint& x, const Matrix<Integer>& w);
Rational c_at(const FFPoint& x, const Matrix<FqPoly>& w);

bool core_test(const ZPoint& x, const Threshold& theta);
bool core_test(const FFPoint& x, const Threshold& theta);
// Vertex form: all increments r_{i+1} - r_i <= theta.
bool core_test_r(const std::vector<long>& r, const Rational& theta);

inline constexpr int kMaxRepsRank = 6;
inline constexpr long kMaxRepsTheta = 16;
// Ascending r with increments in [0, theta] and sum in [0, n-1], sorted.
std::vector<std::vector<long>> core_orbit_reps(int n, const Rational& theta);
// r - floor(sum/n): the homothety representative with sum in [0, n-1].
std::vector<long> normalize_r(std::vector<long> r);

// One-sided: true when some c_W(x) > theta + C beta, which places x in the
// beta-thinned cover.
bool thinned_membership(const ZPoint& x, const Threshold& theta, const Rational& beta, const Rational& C);
bool thinned_membership(const FFPoint& x, const Threshold& theta, const Rational& beta, const Rational& C);

}  // namespace latred::covers
