#include "latred/covers.hpp"

#include <algorithm>
#include <map>

namespace latred::covers {

std::string Threshold::str() const {
  if (log_part.is_zero()) return to_string(base);
  return to_string(base) + " + " + log_part.str();
}

Threshold zero_threshold() { return {}; }

Threshold adjacent_threshold(int n) { return {Rational(4 * n), LogValue()}; }

Threshold localized_threshold(int n, const std::vector<Integer>& T) {
  check_primes(T);
  Integer prod = 1;
  for (const auto& p : T) prod *= p;
  return {Rational(4 * n), LogValue::log_of(Rational(prod)) * (4L * n)};
}

Threshold localized_threshold(int n, const std::vector<FqPoly>& T) {
  check_primes(T);
  long R = 0;
  for (const auto& p : T) R += p.degree();
  return {Rational(4L * n * (R + 1)), LogValue()};
}

Threshold raised(const Threshold& t, const Rational& extra) { return {t.base + extra, t.log_part}; }

bool above(const LogValue& c, const Threshold& t) { return (c - t.log_part).exceeds(t.base); }

bool above(const Rational& c, const Threshold& t) {
  // a nonzero log part is irrational, so there is no tie
  if (!t.log_part.is_zero()) return !t.log_part.exceeds(c - t.base);
  return c > t.base;
}

latff::VolumeSpace volume_space(const FiniteField& F, const FVertex& v) { return latff::VolumeSpace(F, v.basis.transpose()); }

FVertex vertex_from_r(const FiniteField& F, const std::vector<long>& r) {
  const std::size_t n = r.size();
  Matrix<FqRational> b(n, n, FqRational::zero(F));
  for (std::size_t i = 0; i < n; ++i) b(i, i) = FqRational::t_pow(F, static_cast<int>(-r[i]));
  building::Context<local::DegreeLocal> ctx{{&F}, static_cast<int>(n)};
  return building::canonical_vertex(ctx, b);
}

FFPoint vertex_point(const FiniteField& F, const FVertex& v) { return {&F, {v}, {Rational(1)}, std::nullopt}; }

std::vector<long> vertex_invariants(const FiniteField& F, const FVertex& v) {
  return latff::diagonal_basis(volume_space(F, v)).r;
}

void validate(const FFPoint& x) {
  if (!x.F) fail(ErrorKind::range, "point has no field");
  if (x.vertices.empty() || x.vertices.size() != x.coeffs.size())
    fail(ErrorKind::range, "need one positive coefficient per vertex");
  Rational sum = 0;
  for (const auto& c : x.coeffs) {
    if (c <= 0) fail(ErrorKind::range, "convex coefficients must be positive");
    sum += c;
  }
  if (sum != 1) fail(ErrorKind::range, "convex coefficients must sum to 1");
  const int n = static_cast<int>(x.vertices.front().basis.rows());
  building::Context<local::DegreeLocal> ctx{{x.F}, n};
  for (std::size_t i = 0; i < x.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < x.vertices.size(); ++j)
      if (!building::adjacent(ctx, x.vertices[i], x.vertices[j]))
        fail(ErrorKind::range, "vertices of a point must be pairwise adjacent");
}

namespace {

void check_rank(int n) {
  if (n > kMaxCoverRank) fail(ErrorKind::scale, "cover membership supports n <= 4");
}

}  // namespace

LogValue c_at(const ZPoint& x, const Matrix<Integer>& w) {
  if (x.B) return sarith::loc_c(sarith::ZLocSummand{w}, x.s, *x.B);
  return latz::c_value(x.s, latz::ZSummand(w));
}

Rational c_at(const FFPoint& x, const Matrix<FqPoly>& w) {
  Rational c = 0;
  for (std::size_t i = 0; i < x.vertices.size(); ++i) {
    latff::VolumeSpace vs = volume_space(*x.F, x.vertices[i]);
    long ci = x.B ? sarith::loc_c(sarith::FLocSummand{w}, vs, *x.B) : latff::ff_c_value(vs, latff::FFSummand(*x.F, w));
    c += x.coeffs[i] * ci;
  }
  return c;
}

std::vector<ZMember> cover_membership(const ZPoint& x, const Threshold& theta) {
  check_rank(x.s.n());
  std::vector<ZMember> out;
  if (x.B) {
    Matrix<Rational> P = sarith::lattice_basis(*x.B);
    latz::Report rep = latz::canonical_filtration(sarith::transported(x.s, P));
    for (std::size_t i = 0; i < rep.c_values.size(); ++i)
      if (above(rep.c_values[i], theta))
        out.push_back({sarith::localize(IntegerRing{}, rep.chain[i + 1].basis(), P).basis, rep.c_values[i]});
    return out;
  }
  latz::Report rep = latz::canonical_filtration(x.s);
  for (std::size_t i = 0; i < rep.c_values.size(); ++i)
    if (above(rep.c_values[i], theta)) out.push_back({rep.chain[i + 1].basis(), rep.c_values[i]});
  return out;
}

std::vector<FFMember> cover_membership(const FFPoint& x, const Threshold& theta) {
  validate(x);
  const FiniteField& F = *x.F;
  check_rank(static_cast<int>(x.vertices.front().basis.rows()));
  std::optional<Matrix<FqRational>> P;
  if (x.B) P = sarith::lattice_basis(*x.B);

  // candidate key -> (basis, c at the vertices seen so far)
  std::map<std::string, Matrix<FqPoly>> cand;
  for (const auto& v : x.vertices) {
    latff::VolumeSpace vs = volume_space(F, v);
    if (P) vs = sarith::transported(vs, *P);
    latff::Report rep = latff::ff_invariants_and_filtration(vs).report;
    for (std::size_t i = 0; i < rep.c_values.size(); ++i) {
      Matrix<FqPoly> w = rep.chain[i + 1].basis();
      if (P) w = sarith::localize(latff::poly_ring(F), w, *P).basis;
      std::string key;
      for (const auto& e : w.data()) key += e.str() + ";";
      key = std::to_string(w.rows()) + "|" + key;
      cand.emplace(std::move(key), std::move(w));
    }
  }
  std::vector<FFMember> out;
  for (const auto& [k, w] : cand) {
    Rational c = c_at(x, w);
    if (above(c, theta)) out.push_back({w, c});
  }
  std::stable_sort(out.begin(), out.end(), [](const FFMember& a, const FFMember& b) { return a.w.rows() < b.w.rows(); });
  return out;
}

bool core_test(const ZPoint& x, const Threshold& theta) { return cover_membership(x, theta).empty(); }
bool core_test(const FFPoint& x, const Threshold& theta) { return cover_membership(x, theta).empty(); }

bool core_test_r(const std::vector<long>& r, const Rational& theta) {
  for (std::size_t i = 0; i + 1 < r.size(); ++i)
    if (Rational(r[i + 1] - r[i]) > theta) return false;
  return true;
}

std::vector<std::vector<long>> core_orbit_reps(int n, const Rational& theta) {
  if (n < 1) fail(ErrorKind::range, "n must be positive");
  if (theta < 0) fail(ErrorKind::range, "threshold must be nonnegative");
  const long top = floor_of(theta).get_si();
  if (n > kMaxRepsRank || top > kMaxRepsTheta) fail(ErrorKind::scale, "core representatives support n <= 6, theta <= 16");
  std::vector<std::vector<long>> out;
  std::vector<long> d(static_cast<std::size_t>(n - 1), 0);
  while (true) {
    // sum r = n r_1 + sum (n-i) d_i must land in [0, n-1]
    long D = 0;
    for (int i = 1; i < n; ++i) D += (n - i) * d[static_cast<std::size_t>(i - 1)];
    long r1 = -D / n;
    if (r1 * n + D < 0) ++r1;
    std::vector<long> r{r1};
    for (long di : d) r.push_back(r.back() + di);
    out.push_back(std::move(r));
    std::size_t pos = 0;
    while (pos < d.size() && ++d[pos] > top) d[pos++] = 0;
    if (pos == d.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long> normalize_r(std::vector<long> r) {
  if (r.empty()) return r;
  const long n = static_cast<long>(r.size());
  long s = 0;
  for (long x : r) s += x;
  long k = s / n;
  if (k * n > s) --k;
  for (auto& x : r) x -= k;
  return r;
}

bool thinned_membership(const ZPoint& x, const Threshold& theta, const Rational& beta, const Rational& C) {
  return !cover_membership(x, raised(theta, C * beta)).empty();
}

bool thinned_membership(const FFPoint& x, const Threshold& theta, const Rational& beta, const Rational& C) {
  return !cover_membership(x, raised(theta, C * beta)).empty();
}

}  // namespace latred::covers
