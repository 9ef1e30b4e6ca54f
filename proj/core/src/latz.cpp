#include "latred/latz.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>

#include "latred/error.hpp"
#include "latred/linalg.hpp"

namespace latred::latz {

namespace {

const IntegerRing kZ;
const RationalField kQ;

// gamma_m^m for the Hermite constants, m <= 6.
Rational hermite_power(int m) {
  static const Rational table[] = {1, 1, Rational(4, 3), 2, 4, 8, Rational(64, 3)};
  return table[m];
}

Matrix<Rational> to_q(const Matrix<Integer>& m) { return to_fractions(kZ, m); }

Integer content(const std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) g = kZ.gcd(g, x);
  return g;
}

// Exact LLL (delta = 3/4) on the rows of the identity under the form g.
// Returns unimodular T; T g T^T is reduced. Enumeration cost depends on the
// basis skew, so the searches below run in reduced coordinates.
Matrix<Integer> lll(const Matrix<Rational>& g0) {
  const std::size_t n = g0.rows();
  Matrix<Integer> T = Matrix<Integer>::identity(n, 0, 1);
  Matrix<Rational> g = g0;
  Matrix<Rational> mu(n, n, Rational(0));
  std::vector<Rational> B(n);
  auto gso = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        Rational x = g(i, j);
        for (std::size_t k = 0; k < j; ++k) x -= mu(j, k) * mu(i, k) * B[k];
        mu(i, j) = x / B[j];
      }
      Rational b = g(i, i);
      for (std::size_t k = 0; k < i; ++k) b -= mu(i, k) * mu(i, k) * B[k];
      B[i] = b;
    }
  };
  // row a -= q row b, in T and in g
  auto sub = [&](std::size_t a, std::size_t b, const Integer& q) {
    for (std::size_t c = 0; c < n; ++c) T(a, c) -= q * T(b, c);
    for (std::size_t c = 0; c < n; ++c) g(a, c) -= q * g(b, c);
    for (std::size_t r = 0; r < n; ++r) g(r, a) -= q * g(r, b);
  };
  auto swap = [&](std::size_t a, std::size_t b) {
    T.swap_rows(a, b);
    g.swap_rows(a, b);
    g.swap_cols(a, b);
  };
  gso();
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t j = k; j-- > 0;) {
      Rational m = mu(k, j);
      Integer q = floor_of(m + Rational(1, 2));
      if (q != 0) {
        sub(k, j, q);
        gso();
      }
    }
    if (B[k] >= (Rational(3, 4) - mu(k, k - 1) * mu(k, k - 1)) * B[k - 1]) {
      ++k;
    } else {
      swap(k, k - 1);
      gso();
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return T;
}

Matrix<Rational> reduced_gram(const Matrix<Rational>& g, const Matrix<Integer>& T) {
  Matrix<Rational> t = to_q(T);
  return t * g * t.transpose();
}

void check_scale(int n) {
  if (n > kMaxEnumerationRank) fail(ErrorKind::scale, "enumeration supports n <= 6");
}

}  // namespace

InnerProduct::InnerProduct(Matrix<Rational> gram) : gram_(std::move(gram)) {
  if (!gram_.square()) fail(ErrorKind::dimension, "Gram matrix must be square");
  const std::size_t n = gram_.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (gram_(i, j) != gram_(j, i)) fail(ErrorKind::definiteness, "Gram matrix is not symmetric");
  // Sylvester: leading principal minors positive.
  for (std::size_t k = 1; k <= n; ++k)
    if (determinant(kQ, gram_.block(0, 0, k, k)) <= 0)
      fail(ErrorKind::definiteness, "Gram matrix is not positive definite");
}

Rational InnerProduct::operator()(const std::vector<Rational>& u, const std::vector<Rational>& v) const {
  Rational acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) acc += u[i] * gram_(i, j) * v[j];
  }
  return acc;
}

ZSummand::ZSummand(const Matrix<Integer>& rows) : basis_(saturate(kZ, rows)) {}

ZSummand ZSummand::zero(int n) {
  ZSummand w;
  w.basis_ = Matrix<Integer>(0, static_cast<std::size_t>(n), Integer(0));
  return w;
}

ZSummand ZSummand::full(int n) {
  ZSummand w;
  w.basis_ = Matrix<Integer>::identity(static_cast<std::size_t>(n), 0, 1);
  return w;
}

ZSummand ZSummand::from_hnf(Matrix<Integer> basis) {
  ZSummand w;
  w.basis_ = std::move(basis);
  return w;
}

std::string ZSummand::key() const {
  std::string k = std::to_string(basis_.rows()) + ":";
  for (const auto& x : basis_.data()) k += x.get_str() + ",";
  return k;
}

ZSummand meet(const ZSummand& a, const ZSummand& b) {
  return ZSummand::from_hnf(summand_meet(kZ, a.basis(), b.basis()));
}

ZSummand join(const ZSummand& a, const ZSummand& b) {
  return ZSummand::from_hnf(summand_join(kZ, a.basis(), b.basis()));
}

bool leq(const ZSummand& a, const ZSummand& b) { return summand_leq(kZ, a.basis(), b.basis()); }

Rational gram_volume_sq(const InnerProduct& s, const Matrix<Rational>& rows) {
  if (rows.cols() != static_cast<std::size_t>(s.n())) fail(ErrorKind::dimension, "basis length differs from n");
  if (rows.rows() == 0) return 1;
  Matrix<Rational> g = rows * s.gram() * rows.transpose();
  Rational d = determinant(kQ, g);
  if (d == 0) fail(ErrorKind::rank_deficiency, "basis rows are dependent");
  return d;
}

Rational volume_sq(const InnerProduct& s, const ZSummand& w) { return gram_volume_sq(s, to_q(w.basis())); }

std::vector<std::vector<Integer>> short_vectors(const InnerProduct& s, const Rational& bound) {
  const int n = s.n();
  const Matrix<Integer> T = lll(s.gram());
  // Fincke-Pohst on the reduced form: Q(v) = sum_i q_ii (v_i + sum_{j>i} q_ij v_j)^2.
  Matrix<Rational> q = reduced_gram(s.gram(), T);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      q(j, i) = q(i, j);
      q(i, j) = q(i, j) / q(i, i);
    }
    for (int k = i + 1; k < n; ++k)
      for (int l = k; l < n; ++l) q(k, l) -= q(k, i) * q(i, l);
  }
  std::vector<std::vector<Integer>> out;
  std::vector<Integer> v(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i, const Rational& remaining) -> void {
    if (i < 0) {
      bool nonzero = false;
      for (const auto& x : v) nonzero = nonzero || x != 0;
      if (nonzero) out.push_back(v);
      return;
    }
    Rational c = 0;
    for (int j = i + 1; j < n; ++j) c -= q(i, j) * v[static_cast<std::size_t>(j)];
    Rational t = remaining / q(i, i);
    // integers x with (x - c)^2 <= t
    double cd = c.get_d(), td = std::sqrt(std::max(0.0, t.get_d()));
    Integer lo(std::floor(cd - td) - 1), hi(std::ceil(cd + td) + 1);
    auto inside = [&](const Integer& x) {
      Rational d = Rational(x) - c;
      return d * d <= t;
    };
    while (lo <= hi && !inside(lo)) ++lo;
    while (hi >= lo && !inside(hi)) --hi;
    for (Integer x = lo; x <= hi; ++x) {
      Rational d = Rational(x) - c;
      v[static_cast<std::size_t>(i)] = x;
      self(self, i - 1, remaining - q(i, i) * d * d);
    }
    v[static_cast<std::size_t>(i)] = 0;
  };
  if (bound >= 0) rec(rec, n - 1, bound);

  std::vector<std::pair<Rational, std::vector<Integer>>> keyed;
  for (auto& y : out) {
    std::vector<Integer> w(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = 0; j < w.size(); ++j) w[j] += y[i] * T(i, j);
    auto first = std::find_if(w.begin(), w.end(), [](const Integer& x) { return x != 0; });
    if (*first < 0) continue;
    std::vector<Rational> wq(w.begin(), w.end());
    keyed.push_back({s(wq, wq), std::move(w)});
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  std::vector<std::vector<Integer>> sorted;
  for (auto& [norm, w] : keyed) sorted.push_back(std::move(w));
  return sorted;
}

Rational shortest_norm_sq(const InnerProduct& s) {
  const Matrix<Rational> g = reduced_gram(s.gram(), lll(s.gram()));
  Rational b = g(0, 0);
  for (int i = 1; i < s.n(); ++i) b = std::min(b, Rational(g(i, i)));
  auto vs = short_vectors(s, b);
  std::vector<Rational> v(vs.front().begin(), vs.front().end());
  return s(v, v);
}

std::vector<ZSummand> enumerate_summands(const InnerProduct& s, int m, const Rational& bound) {
  const int n = s.n();
  check_scale(n);
  if (m < 0 || m > n) fail(ErrorKind::range, "rank out of range");
  if (m == 0) return bound >= 1 ? std::vector<ZSummand>{ZSummand::zero(n)} : std::vector<ZSummand>{};
  if (m == n) {
    if (determinant(kQ, s.gram()) <= bound) return {ZSummand::full(n)};
    return {};
  }
  if (bound <= 0) return {};
  // Successive-minima vectors u_1..u_m of W are primitive, lie in W, and
  // satisfy prod |u_i|^2 <= gamma_m^m vol(W)^2 (Minkowski's second theorem).
  const Rational mu1 = shortest_norm_sq(s);
  const Rational prod_bound = hermite_power(m) * bound;
  Rational norm_bound = prod_bound;
  for (int i = 1; i < m; ++i) norm_bound /= mu1;

  std::vector<std::vector<Integer>> vecs;
  std::vector<Rational> norms;
  for (auto& v : short_vectors(s, norm_bound)) {
    if (content(v) != 1) continue;
    std::vector<Rational> vq(v.begin(), v.end());
    norms.push_back(s(vq, vq));
    vecs.push_back(std::move(v));
  }

  std::map<std::string, ZSummand> found;
  std::vector<std::size_t> pick;
  auto independent = [&]() {
    if (pick.size() < 2) return true;
    Matrix<Rational> r(0, static_cast<std::size_t>(n), Rational(0));
    for (auto j : pick) r.append_row(std::vector<Rational>(vecs[j].begin(), vecs[j].end()));
    return rank(kQ, r) == pick.size();
  };
  auto rec = [&](auto&& self, std::size_t start, const Rational& prod) -> void {
    if (static_cast<int>(pick.size()) == m) {
      Matrix<Integer> rows(0, static_cast<std::size_t>(n), Integer(0));
      for (auto i : pick) rows.append_row(vecs[i]);
      ZSummand w(rows);
      if (found.count(w.key())) return;
      if (volume_sq(s, w) <= bound) found.emplace(w.key(), w);
      return;
    }
    const int left = m - static_cast<int>(pick.size());
    for (std::size_t i = start; i < vecs.size(); ++i) {
      Rational p = prod * norms[i];
      Rational lower = p;
      for (int k = 1; k < left; ++k) lower *= norms[i];
      if (lower > prod_bound) break;  // norms are sorted
      pick.push_back(i);
      if (independent()) self(self, i + 1, p);
      pick.pop_back();
    }
  };
  rec(rec, 0, Rational(1));

  std::vector<ZSummand> out;
  for (auto& [k, w] : found) out.push_back(std::move(w));
  return out;
}

std::vector<ZSummand> enumerate_summands(const InnerProduct& s, const Rational& bound) {
  std::vector<ZSummand> out;
  for (int m = 0; m <= s.n(); ++m)
    for (auto& w : enumerate_summands(s, m, bound)) out.push_back(std::move(w));
  return out;
}

std::vector<Rational> rank_minima(const InnerProduct& s) {
  const int n = s.n();
  check_scale(n);
  std::vector<Rational> out{1};
  // Greedy independent short vectors give an upper bound for each rank.
  const Matrix<Rational> g = reduced_gram(s.gram(), lll(s.gram()));
  Rational maxdiag = g(0, 0);
  for (int i = 1; i < n; ++i) maxdiag = std::max(maxdiag, Rational(g(i, i)));
  Matrix<Integer> greedy(0, static_cast<std::size_t>(n), Integer(0));
  for (const auto& v : short_vectors(s, maxdiag)) {
    if (static_cast<int>(greedy.rows()) == n) break;
    Matrix<Integer> trial = greedy;
    trial.append_row(v);
    if (rank(kQ, to_q(trial)) == trial.rows()) greedy = trial;
  }
  for (int m = 1; m < n; ++m) {
    Rational upper = volume_sq(s, ZSummand(greedy.block(0, 0, static_cast<std::size_t>(m), greedy.cols())));
    auto ws = enumerate_summands(s, m, upper);
    Rational best = upper;
    for (const auto& w : ws) best = std::min(best, volume_sq(s, w));
    out.push_back(best);
  }
  if (n > 0) out.push_back(determinant(kQ, s.gram()));
  return out;
}

InnerProduct restrict_to(const InnerProduct& s, const ZSummand& w) {
  Matrix<Rational> b = to_q(w.basis());
  return InnerProduct(b * s.gram() * b.transpose());
}

Quotient quotient(const InnerProduct& s, const ZSummand& w) {
  const std::size_t n = static_cast<std::size_t>(s.n());
  const std::size_t m = static_cast<std::size_t>(w.rank());
  Matrix<Integer> comp;
  if (m == 0) {
    comp = Matrix<Integer>::identity(n, 0, 1);
  } else {
    auto snf = smith_normal_form(kZ, w.basis());
    comp = snf.V.block(m, 0, n - m, n);
  }
  Matrix<Rational> c = to_q(comp);
  Matrix<Rational> gcc = c * s.gram() * c.transpose();
  if (m == 0) return {InnerProduct(gcc), comp};
  Matrix<Rational> b = to_q(w.basis());
  Matrix<Rational> gcw = c * s.gram() * b.transpose();
  Matrix<Rational> gww = b * s.gram() * b.transpose();
  Matrix<Rational> schur = gcw * inverse(kQ, gww) * gcw.transpose();
  for (std::size_t i = 0; i < gcc.rows(); ++i)
    for (std::size_t j = 0; j < gcc.cols(); ++j) gcc(i, j) -= schur(i, j);
  return {InnerProduct(gcc), comp};
}

std::vector<ZSummand> ZOracle::summands(int rank, const LogValue& bound) const {
  // logvol <= ln(x)/k  <=>  (vol^2)^k <= x^2
  const Rational& x = bound.base();
  const long k = bound.root();
  Rational x2 = x * x;
  Integer rn, rd;
  mpz_root(rn.get_mpz_t(), x2.get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_root(rd.get_mpz_t(), x2.get_den_mpz_t(), static_cast<unsigned long>(k));
  Rational upper(rn + 1, rd);  // >= (x^2)^(1/k)
  upper.canonicalize();
  std::vector<ZSummand> out;
  for (auto& w : enumerate_summands(s_, rank, upper))
    if (ipow(volume_sq(s_, w), k) <= x2) out.push_back(std::move(w));
  return out;
}

Report canonical_filtration(const InnerProduct& s) { return filtration::canonical_filtration(ZOracle(s)); }

LogValue c_value(const InnerProduct& s, const ZSummand& w) {
  const int n = s.n();
  const int m = w.rank();
  if (m <= 0 || m >= n) fail(ErrorKind::boundary_module, "c_W is defined only for 0 < W < V");
  const Rational vw = volume_sq(s, w);
  auto sub = rank_minima(restrict_to(s, w));
  auto quo = rank_minima(quotient(s, w).form);
  std::optional<LogValue> out, in;
  for (int j = 1; j <= n - m; ++j) {
    LogValue v = LogValue::log_of(quo[static_cast<std::size_t>(j)], 2) / j;
    if (!out || v < *out) out = v;
  }
  for (int i = 1; i <= m; ++i) {
    LogValue v = LogValue::log_of(vw / sub[static_cast<std::size_t>(m - i)], 2) / i;
    if (!in || v > *in) in = v;
  }
  return *out - *in;
}

double spd_distance(const InnerProduct& s1, const InnerProduct& s2) {
  if (s1.n() != s2.n()) fail(ErrorKind::dimension, "forms of different dimension");
  const int n = s1.n();
  Eigen::MatrixXd a(n, n), b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a(i, j) = s2.gram()(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).get_d();
      b(i, j) = s1.gram()(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).get_d();
    }
  // Eigenvalues of s1^-1 s2 are those of s1^-1/2 s2 s1^-1/2.
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(a, b);
  double acc = 0;
  for (int i = 0; i < n; ++i) {
    double l = std::log(es.eigenvalues()(i));
    acc += l * l;
  }
  return std::sqrt(acc);
}

}  // namespace latred::latz
