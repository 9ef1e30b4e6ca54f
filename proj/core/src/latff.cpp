#include "latred/latff.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "latred/error.hpp"
#include "latred/exactmath.hpp"
#include "latred/linalg.hpp"
#include "latred/local.hpp"
#include "latred/valuation.hpp"

namespace latred::latff {

namespace {

FqRational tp(const FiniteField& F, long k) { return FqRational::t_pow(F, static_cast<int>(k)); }

Matrix<FqRational> to_q(const FiniteField& F, const Matrix<FqPoly>& m) { return to_fractions(PolyRing{&F}, m); }

std::vector<FqRational> to_q(const std::vector<FqPoly>& v) { return std::vector<FqRational>(v.begin(), v.end()); }

long max_degree(const Matrix<FqRational>& m) {
  bool any = false;
  long d = 0;
  for (const auto& x : m.data()) {
    if (x.is_zero()) continue;
    if (!any || x.degree() > d) d = x.degree();
    any = true;
  }
  return d;
}

Matrix<FqPoly> rows_of(const FiniteField& F, const std::vector<std::vector<FqPoly>>& rows, std::size_t n) {
  Matrix<FqPoly> m(0, n, FqPoly::zero(F));
  for (const auto& r : rows) m.append_row(r);
  return m;
}

// Rows completing the primitive row v to a basis of F_q[t]^n.
Matrix<FqPoly> completion(const FiniteField& F, const Matrix<FqPoly>& rows) {
  const std::size_t n = rows.cols(), m = rows.rows();
  if (m == 0) return Matrix<FqPoly>::identity(n, FqPoly::zero(F), FqPoly::constant(F, 1));
  auto snf = smith_normal_form(PolyRing{&F}, rows);
  return snf.V.block(m, 0, n - m, n);
}

}  // namespace

PolyRing poly_ring(const FiniteField& F) { return PolyRing{&F}; }

VolumeSpace::VolumeSpace(const FiniteField& F, Matrix<FqRational> basis_rows)
    : F_(&F), basis_(std::move(basis_rows)) {
  if (!basis_.square()) fail(ErrorKind::dimension, "S basis must be square");
  if (basis_.rows() == 0) {
    inv_ = basis_;
    return;
  }
  try {
    inv_ = inverse(FqRationalField{F_}, basis_);
  } catch (const MathError&) {
    fail(ErrorKind::rank_deficiency, "S basis vectors are dependent");
  }
}

VolumeSpace VolumeSpace::standard(const FiniteField& F, int n) {
  return VolumeSpace(F, Matrix<FqRational>::identity(static_cast<std::size_t>(n), FqRational::zero(F),
                                                     FqRational::one(F)));
}

VolumeSpace VolumeSpace::diagonal(const FiniteField& F, const std::vector<long>& r) {
  const std::size_t n = r.size();
  Matrix<FqRational> b(n, n, FqRational::zero(F));
  for (std::size_t i = 0; i < n; ++i) b(i, i) = tp(F, -r[i]);
  return VolumeSpace(F, std::move(b));
}

VolumeSpace VolumeSpace::scaled(const FqRational& q) const {
  return VolumeSpace(*F_, basis_.map([&](const FqRational& x) { return x * q; }));
}

VolumeSpace VolumeSpace::transformed(const Matrix<FqRational>& phi) const {
  return VolumeSpace(*F_, multiply(basis_, phi, FqRational::zero(*F_)));
}

FFSummand::FFSummand(const FiniteField& F, const Matrix<FqPoly>& rows) : basis_(saturate(PolyRing{&F}, rows)) {}

FFSummand FFSummand::zero(const FiniteField& F, int n) {
  return from_hnf(Matrix<FqPoly>(0, static_cast<std::size_t>(n), FqPoly::zero(F)));
}

FFSummand FFSummand::full(const FiniteField& F, int n) {
  return from_hnf(Matrix<FqPoly>::identity(static_cast<std::size_t>(n), FqPoly::zero(F), FqPoly::constant(F, 1)));
}

std::string FFSummand::key() const {
  std::string k = std::to_string(basis_.rows()) + ":";
  for (const auto& x : basis_.data()) k += x.str() + ",";
  return k;
}

namespace {
const FiniteField& field_of(const FFSummand& a, const FFSummand& b) {
  for (const auto* w : {&a, &b})
    for (const auto& x : w->basis().data())
      if (x.field()) return *x.field();
  fail(ErrorKind::dimension, "summand without field data");
}
}  // namespace

FFSummand meet(const FFSummand& a, const FFSummand& b) {
  if (a.rank() == 0) return a;
  if (b.rank() == 0) return b;
  return FFSummand::from_hnf(summand_meet(poly_ring(field_of(a, b)), a.basis(), b.basis()));
}

FFSummand join(const FFSummand& a, const FFSummand& b) {
  if (a.rank() == 0) return b;
  if (b.rank() == 0) return a;
  return FFSummand::from_hnf(summand_join(poly_ring(field_of(a, b)), a.basis(), b.basis()));
}

bool leq(const FFSummand& a, const FFSummand& b) {
  if (a.rank() == 0) return true;
  if (b.rank() == 0) return false;
  return summand_leq(poly_ring(field_of(a, b)), a.basis(), b.basis());
}

long ff_logvol(const VolumeSpace& vs, const Matrix<FqRational>& rows) {
  const FiniteField& F = vs.field();
  if (rows.cols() != static_cast<std::size_t>(vs.n())) fail(ErrorKind::dimension, "row length differs from n");
  if (rows.rows() == 0) return 0;
  const FqRationalField K{&F};
  Matrix<FqRational> a = multiply(rows, vs.coords(), K.zero());
  if (a.square()) {
    FqRational d = determinant(K, a);
    if (d.is_zero()) fail(ErrorKind::rank_deficiency, "rows are dependent");
    return d.degree();
  }
  bool any = false;
  long best = 0;
  for (const auto& mi : minors(K, a, a.rows())) {
    if (mi.value.is_zero()) continue;
    if (!any || mi.value.degree() > best) best = mi.value.degree();
    any = true;
  }
  if (!any) fail(ErrorKind::rank_deficiency, "rows are dependent");
  return best;
}

long ff_logvol(const VolumeSpace& vs, const FFSummand& w) { return ff_logvol(vs, to_q(vs.field(), w.basis())); }

long ff_logvol(const VolumeSpace& vs) {
  if (vs.n() == 0) return 0;
  return -determinant(FqRationalField{&vs.field()}, vs.basis()).degree();
}

SubQuotient sub_quotient(const VolumeSpace& vs, const FFSummand& w) {
  const FiniteField& F = vs.field();
  const PolyRing Z{&F};
  const FqRationalField K{&F};
  const std::size_t n = static_cast<std::size_t>(vs.n()), m = static_cast<std::size_t>(w.rank());
  if (w.ambient() != vs.n()) fail(ErrorKind::dimension, "summand ambient rank differs from n");
  if (!(hnf(Z, w.basis()) == saturate(Z, w.basis()))) fail(ErrorKind::projectivity, "W is not saturated");

  Matrix<FqRational> wq = to_q(F, w.basis());
  Matrix<FqPoly> comp = completion(F, w.basis());
  Matrix<FqPoly> full = stack<PolyRing>(w.basis(), comp);
  Matrix<FqRational> pinv = inverse(K, to_q(F, full));

  // R-bases of S ∩ QW and of a complement, in b-coordinates.
  local::DegreeLocal O{&F};
  local::Saturation<local::DegreeLocal> sat;
  if (m == 0) {
    sat.basis = Matrix<FqRational>(0, n, K.zero());
    sat.complement = Matrix<FqRational>::identity(n, K.zero(), K.one());
  } else {
    sat = local::saturate_rows(O, multiply(wq, vs.coords(), K.zero()));
  }

  Matrix<FqRational> sub_rows(m, m, K.zero());
  if (m > 0) sub_rows = solve_left(K, multiply(sat.basis, vs.basis(), K.zero()), wq);
  Matrix<FqRational> images = multiply(multiply(sat.complement, vs.basis(), K.zero()), pinv, K.zero());
  Matrix<FqRational> quot_rows = images.block(0, m, n - m, n - m);
  return {VolumeSpace(F, std::move(sub_rows)), VolumeSpace(F, std::move(quot_rows)), std::move(comp)};
}

namespace {

// coords() = N / d with N polynomial.
struct PolyCoords {
  FqPoly d;
  Matrix<FqPoly> N;
  long maxN = 0;
};

PolyCoords poly_coords(const VolumeSpace& vs) {
  const FiniteField& F = vs.field();
  PolyCoords pc{FqPoly::constant(F, 1), {}, 0};
  for (const auto& x : vs.coords().data())
    if (!x.is_zero()) pc.d = PolyRing{&F}.lcm(pc.d, x.den());
  pc.N = vs.coords().map([&](const FqRational& x) { return local::poly_part(x * FqRational(pc.d)); });
  for (const auto& x : pc.N.data()) pc.maxN = std::max<long>(pc.maxN, x.degree());
  return pc;
}

long vector_logvol(const PolyCoords& pc, const std::vector<FqPoly>& v) {
  long best = 0;
  bool any = false;
  for (std::size_t j = 0; j < pc.N.cols(); ++j) {
    FqPoly acc = FqPoly::zero(*pc.d.field());
    for (std::size_t i = 0; i < v.size(); ++i) acc += v[i] * pc.N(i, j);
    if (acc.is_zero()) continue;
    if (!any || acc.degree() > best) best = acc.degree();
    any = true;
  }
  if (!any) fail(ErrorKind::zero_argument, "zero vector");
  return best - pc.d.degree();
}

}  // namespace

std::vector<std::vector<FqPoly>> short_space(const VolumeSpace& vs, long c) {
  const FiniteField& F = vs.field();
  const std::size_t n = static_cast<std::size_t>(vs.n());
  const long D = c + max_degree(vs.basis());
  if (n == 0 || D < 0) return {};
  const PolyCoords pc = poly_coords(vs);
  const FqPoly& d = pc.d;
  const Matrix<FqPoly>& N = pc.N;
  const long maxN = pc.maxN;
  const long allowed = c + d.degree();  // deg (vN)_j <= allowed
  const std::size_t width = static_cast<std::size_t>(D + 1);
  const std::size_t unknowns = n * width;
  // unknown (i, k) -> i * width + (D - k): coordinates in order, high degree first
  auto col = [&](std::size_t i, long k) { return i * width + static_cast<std::size_t>(D - k); };

  const FqField Fq{&F};
  Matrix<FqElement> cons(0, unknowns, Fq.zero());
  for (std::size_t j = 0; j < n; ++j)
    for (long e = allowed + 1; e <= D + maxN; ++e) {
      std::vector<FqElement> row(unknowns, Fq.zero());
      bool nonzero = false;
      for (std::size_t i = 0; i < n; ++i)
        for (long k = 0; k <= D; ++k) {
          FiniteField::Elem a = N(i, j).coeff(static_cast<int>(e - k));
          if (a == 0) continue;
          row[col(i, k)] = Fq.of(a);
          nonzero = true;
        }
      if (nonzero) cons.append_row(row);
    }
  Matrix<FqElement> ker;
  if (cons.rows() == 0) ker = Matrix<FqElement>::identity(unknowns, Fq.zero(), Fq.one());
  else ker = right_kernel(Fq, cons);
  if (ker.rows() == 0) return {};
  Matrix<FqElement> red = rref(Fq, ker).reduced;

  std::vector<std::vector<FqPoly>> out;
  for (std::size_t r = 0; r < red.rows(); ++r) {
    std::vector<FqPoly> v;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<FiniteField::Elem> cs(width, 0);
      for (long k = 0; k <= D; ++k) cs[static_cast<std::size_t>(k)] = red(r, col(i, k)).v;
      v.emplace_back(F, std::move(cs));
    }
    out.push_back(std::move(v));
  }
  return out;
}

ShortVector shortest_vector(const VolumeSpace& vs) {
  if (vs.n() == 0) fail(ErrorKind::dimension, "rank-0 volume space has no vectors");
  // A nonzero polynomial vector has a coordinate of degree >= 0, so its
  // logvol is at least -max deg of the basis entries.
  for (long c = -max_degree(vs.basis());; ++c) {
    auto space = short_space(vs, c);
    if (!space.empty()) return {space.back(), c};
  }
}

DiagonalBasis diagonal_basis(const VolumeSpace& vs) {
  const FiniteField& F = vs.field();
  const FqRationalField K{&F};
  const std::size_t n = static_cast<std::size_t>(vs.n());
  DiagonalBasis out{Matrix<FqPoly>(0, n, FqPoly::zero(F)), Matrix<FqRational>(0, n, K.zero()), {}};
  if (n == 0) return out;

  ShortVector sv = shortest_vector(vs);
  const long r1 = sv.logvol;
  std::vector<FqRational> b1 = to_q(sv.v);
  for (auto& x : b1) x *= tp(F, -r1);
  out.w.append_row(sv.v);
  out.b.append_row(b1);
  out.r.push_back(r1);
  if (n == 1) return out;

  // v extended to a basis P of V; b1 extended to a basis of S by dropping
  // some b_k whose coefficient in b1 is a unit.
  Matrix<FqPoly> P = stack<PolyRing>(rows_of(F, {sv.v}, n), completion(F, rows_of(F, {sv.v}, n)));
  Matrix<FqRational> pinv = inverse(K, to_q(F, P));
  std::vector<FqRational> a = row_times(b1, vs.coords(), K.zero());
  std::size_t k = 0;
  while (a[k].is_zero() || valuation_at_infinity(a[k]).value() != 0) ++k;
  Matrix<FqRational> bprime(0, n, K.zero());
  bprime.append_row(b1);
  for (std::size_t j = 0; j < n; ++j)
    if (j != k) bprime.append_row(vs.basis().row(j));
  Matrix<FqRational> bprime_inv = inverse(K, bprime);

  Matrix<FqRational> quot(n - 1, n - 1, K.zero());
  std::size_t qi = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == k) continue;
    auto img = row_times(vs.basis().row(j), pinv, K.zero());
    for (std::size_t c = 1; c < n; ++c) quot(qi, c - 1) = img[c];
    ++qi;
  }
  DiagonalBasis rest = diagonal_basis(VolumeSpace(F, std::move(quot)));
  Matrix<FqPoly> tail = P.block(1, 0, n - 1, n);

  for (std::size_t i = 0; i + 1 < n; ++i) {
    const long ri = rest.r[i];
    std::vector<FqPoly> w = row_times(rest.w.row(i), tail, FqPoly::zero(F));
    std::vector<FqRational> scaled = to_q(w);
    for (auto& x : scaled) x *= tp(F, -ri);
    FqRational mu = row_times(scaled, bprime_inv, K.zero())[0];
    // Mixed-fraction step: subtract the polynomial part of the b1-coefficient.
    FqPoly g = local::poly_part(mu * tp(F, ri - r1));
    for (std::size_t j = 0; j < n; ++j) w[j] -= g * sv.v[j];
    std::vector<FqRational> b = to_q(w);
    for (auto& x : b) x *= tp(F, -ri);
    out.w.append_row(w);
    out.b.append_row(b);
    out.r.push_back(ri);
  }
  if (out.r[1] < out.r[0]) fail(ErrorKind::violated_uniqueness, "diagonal basis is not ascending");
  return out;
}

std::vector<long> ff_rank_minima(const VolumeSpace& vs) {
  auto r = diagonal_basis(vs).r;
  std::vector<long> out{0};
  for (long x : r) out.push_back(out.back() + x);
  return out;
}

Invariants ff_invariants_and_filtration(const VolumeSpace& vs) {
  const FiniteField& F = vs.field();
  const int n = vs.n();
  DiagonalBasis db = diagonal_basis(vs);
  std::vector<filtration::GradedPoint<Rational>> points{{0, Rational(0)}};
  long acc = 0;
  for (int m = 1; m <= n; ++m) {
    acc += db.r[static_cast<std::size_t>(m - 1)];
    points.push_back({m, Rational(acc)});
  }
  auto plot = filtration::canonical_plot(points, n);
  Invariants inv{db.r, {}};
  inv.report.minima = plot.minima;
  inv.report.path = plot.path;
  for (const auto& p : plot.path) {
    const std::size_t m = static_cast<std::size_t>(p.rank);
    if (m == 0) inv.report.chain.push_back(FFSummand::zero(F, n));
    else inv.report.chain.push_back(FFSummand(F, db.w.block(0, 0, m, db.w.cols())));
    if (p.rank != 0 && p.rank != n) inv.report.c_values.push_back(Rational(db.r[m] - db.r[m - 1]));
  }
  return inv;
}

long ff_c_value(const VolumeSpace& vs, const FFSummand& w) {
  const int m = w.rank();
  if (m <= 0 || m >= vs.n()) fail(ErrorKind::boundary_module, "c_W is defined only for 0 < W < V");
  SubQuotient sq = sub_quotient(vs, w);
  // Both r-vectors are ascending: the outgoing slope is the quotient's r_1,
  // the incoming one the sub's r_m.
  return diagonal_basis(sq.quot).r.front() - diagonal_basis(sq.sub).r.back();
}

std::vector<FFSummand> enumerate_summands(const VolumeSpace& vs, int m, long bound) {
  const FiniteField& F = vs.field();
  const int n = vs.n();
  if (m < 0 || m > n) fail(ErrorKind::range, "rank out of range");
  if (m == 0) return bound >= 0 ? std::vector<FFSummand>{FFSummand::zero(F, n)} : std::vector<FFSummand>{};
  if (m == n) return ff_logvol(vs) <= bound ? std::vector<FFSummand>{FFSummand::full(F, n)} : std::vector<FFSummand>{};

  // A diagonal basis of W consists of primitive vectors with logvol in
  // [r_1, bound - (m-1) r_1] summing to logvol W.
  const long r1 = shortest_vector(vs).logvol;
  const long cmax = bound - (m - 1) * r1;
  if (cmax < r1) return {};
  auto space = short_space(vs, cmax);
  const std::size_t dim = space.size();
  const double bits = static_cast<double>(dim) * std::log2(static_cast<double>(F.order()));
  if (bits > kMaxBruteBits) fail(ErrorKind::scale, "short-vector space too large for brute force");

  const PolyRing Z{&F};
  const PolyCoords pc = poly_coords(vs);
  const std::size_t nn = static_cast<std::size_t>(n);
  std::vector<std::pair<long, std::vector<FqPoly>>> vecs;
  std::vector<FiniteField::Elem> digits(dim, 0);
  while (true) {
    std::size_t pos = 0;
    while (pos < dim && ++digits[pos] == F.order()) digits[pos++] = 0;
    if (pos == dim) break;
    std::vector<FqPoly> v(nn, FqPoly::zero(F));
    for (std::size_t b = 0; b < dim; ++b) {
      if (digits[b] == 0) continue;
      for (std::size_t i = 0; i < nn; ++i) v[i] += space[b][i].scaled(digits[b]);
    }
    auto lead = std::find_if(v.begin(), v.end(), [](const FqPoly& x) { return !x.is_zero(); });
    if (lead->leading() != 1) continue;  // one representative per F_q^* orbit
    FqPoly g = FqPoly::zero(F);
    for (const auto& x : v) g = Z.gcd(g, x);
    if (!g.is_one()) continue;
    long lv = vector_logvol(pc, v);
    vecs.push_back({lv, std::move(v)});
  }
  std::sort(vecs.begin(), vecs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  const FqRationalField K{&F};
  std::map<std::string, FFSummand> found;
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t start, long sum) -> void {
    if (static_cast<int>(pick.size()) == m) {
      std::vector<std::vector<FqPoly>> rows;
      for (auto i : pick) rows.push_back(vecs[i].second);
      FFSummand w(F, rows_of(F, rows, nn));
      if (found.count(w.key())) return;
      if (ff_logvol(vs, w) <= bound) found.emplace(w.key(), std::move(w));
      return;
    }
    const long left = m - static_cast<long>(pick.size());
    for (std::size_t i = start; i < vecs.size(); ++i) {
      if (sum + left * vecs[i].first > bound) break;
      pick.push_back(i);
      std::vector<std::vector<FqPoly>> rows;
      for (auto j : pick) rows.push_back(vecs[j].second);
      if (rank(K, to_q(F, rows_of(F, rows, nn))) == pick.size()) self(self, i + 1, sum + vecs[i].first);
      pick.pop_back();
    }
  };
  rec(rec, 0, 0);
  std::vector<FFSummand> out;
  for (auto& [k, w] : found) out.push_back(std::move(w));
  return out;
}

}  // namespace latred::latff
