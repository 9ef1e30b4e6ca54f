#include <gtest/gtest.h>

#include "helpers.hpp"
#include "latred/exactmath.hpp"
#include "latred/filtration.hpp"
#include "latred/latff.hpp"
#include "latred/sample.hpp"
#include "oracles.hpp"

using namespace latred;

namespace {

const FiniteField& F2() { return FiniteField::get(2); }

latff::VolumeSpace space(const std::vector<std::vector<std::string>>& rows) {
  return latff::VolumeSpace(F2(), th::fmat(F2(), rows));
}

latff::FFSummand summand(const std::vector<std::vector<std::string>>& rows) {
  return latff::FFSummand(F2(), th::pmat(F2(), rows));
}

// Product of elementary matrices with multipliers drawn by `mult`; the result
// is invertible over whichever ring the multipliers live in.
template <class Mult>
Matrix<FqRational> elementary_product(sample::Rng& rng, int n, Mult mult) {
  Matrix<FqRational> g = Matrix<FqRational>::identity(static_cast<std::size_t>(n), FqRational::zero(F2()), FqRational::one(F2()));
  for (int k = 0; k < 3 * n; ++k) {
    std::size_t i = static_cast<std::size_t>(sample::uniform(rng, 0, n - 1)), j = static_cast<std::size_t>(sample::uniform(rng, 0, n - 1));
    if (i == j) continue;
    FqRational f = mult(rng);
    for (std::size_t c = 0; c < g.cols(); ++c) g(i, c) = g(i, c) + f * g(j, c);
  }
  return g;
}

Matrix<FqRational> poly_unimodular(sample::Rng& rng, int n) {
  return elementary_product(rng, n, [](sample::Rng& r) -> FqRational { return FqRational(sample::poly(r, F2(), 2)); });
}

// invertible over R = {deg <= 0}
Matrix<FqRational> r_unimodular(sample::Rng& rng, int n) {
  return elementary_product(rng, n, [](sample::Rng& r) -> FqRational {
    return sample::uniform(r, 0, 1) ? FqRational::t_pow(F2(), -static_cast<int>(sample::uniform(r, 0, 2))) : FqRational::zero(F2());
  });
}

std::vector<long> partial_sums(const std::vector<long>& r) {
  std::vector<long> out{0};
  for (long x : r) out.push_back(out.back() + x);
  return out;
}

}  // namespace

TEST(FFLogvol, Examples) {
  latff::VolumeSpace std2 = latff::VolumeSpace::standard(F2(), 2);
  EXPECT_EQ(latff::ff_logvol(std2, summand({{"1", "t^3"}})), 3);
  EXPECT_EQ(latff::ff_logvol(std2, summand({{"1", "0"}})), 0);
  EXPECT_EQ(latff::ff_logvol(std2, latff::FFSummand::full(F2(), 2)), 0);
  EXPECT_EQ(latff::ff_logvol(std2), 0);
  EXPECT_EQ(latff::ff_logvol(std2, th::fmat(F2(), {{"1/t", "t"}})), 1);
}

TEST(FFLogvol, DependentRows) {
  EXPECT_MATH_ERROR(latff::ff_logvol(latff::VolumeSpace::standard(F2(), 2), th::fmat(F2(), {{"1", "t"}, {"t", "t^2"}})), rank_deficiency);
}

TEST(FFSummand, NotSaturatedIsSaturated) {
  EXPECT_EQ(summand({{"t", "t^2"}}), summand({{"1", "t"}}));
}

TEST(SubQuotient, Examples) {
  auto a = latff::sub_quotient(latff::VolumeSpace::standard(F2(), 2), summand({{"1", "0"}}));
  EXPECT_EQ(latff::ff_logvol(a.sub), 0);
  EXPECT_EQ(latff::ff_logvol(a.quot), 0);

  latff::VolumeSpace b_vs = space({{"1", "0"}, {"0", "t^2"}});
  auto b = latff::sub_quotient(b_vs, summand({{"1", "0"}}));
  EXPECT_EQ(latff::ff_logvol(b.sub), 0);
  EXPECT_EQ(latff::ff_logvol(b.quot), -2);
  EXPECT_EQ(latff::ff_logvol(b_vs), -2);

  latff::VolumeSpace c_vs = space({{"1", "0"}, {"1", "t"}});
  auto c = latff::sub_quotient(c_vs, summand({{"0", "1"}}));
  EXPECT_EQ(latff::ff_logvol(c.sub), -1);
  EXPECT_EQ(latff::ff_logvol(c.quot), 0);
  EXPECT_EQ(latff::ff_logvol(c_vs), -1);
  // res basis is t e2 up to a unit of R
  ASSERT_EQ(c.sub.n(), 1);
  EXPECT_EQ(c.sub.basis()(0, 0).degree(), 1);
}

TEST(SubQuotient, VolumesAdd) {
  sample::Rng rng(41);
  for (int i = 0; i < 80; ++i) {
    const int n = static_cast<int>(sample::uniform(rng, 2, 4));
    latff::VolumeSpace vs = sample::volume_space(rng, F2(), n);
    latff::FFSummand w = sample::ff_summand(rng, F2(), n, static_cast<int>(sample::uniform(rng, 1, n - 1)));
    auto sq = latff::sub_quotient(vs, w);
    EXPECT_EQ(latff::ff_logvol(sq.sub), latff::ff_logvol(vs, w));
    EXPECT_EQ(latff::ff_logvol(sq.sub) + latff::ff_logvol(sq.quot), latff::ff_logvol(vs));
  }
}

TEST(DiagonalBasis, Examples) {
  auto a = latff::diagonal_basis(latff::VolumeSpace::standard(F2(), 3));
  EXPECT_EQ(a.r, (std::vector<long>{0, 0, 0}));

  auto b = latff::diagonal_basis(space({{"1", "0"}, {"0", "t^2"}}));
  EXPECT_EQ(b.r, (std::vector<long>{-2, 0}));
  EXPECT_EQ(b.w.row(0), th::pmat(F2(), {{"0", "1"}}).row(0));

  auto c = latff::diagonal_basis(space({{"1", "0"}, {"1", "t"}}));
  EXPECT_EQ(c.r, (std::vector<long>{-1, 0}));
  EXPECT_EQ(c.w.row(0), th::pmat(F2(), {{"0", "1"}}).row(0));
  EXPECT_EQ(c.b.row(0), th::fmat(F2(), {{"0", "t"}}).row(0));
}

TEST(DiagonalBasis, DefiningIdentity) {
  sample::Rng rng(42);
  for (int i = 0; i < 80; ++i) {
    const int n = static_cast<int>(sample::uniform(rng, 1, 4));
    latff::VolumeSpace vs = sample::volume_space(rng, F2(), n);
    auto d = latff::diagonal_basis(vs);
    ASSERT_EQ(d.r.size(), static_cast<std::size_t>(n));
    EXPECT_TRUE(std::is_sorted(d.r.begin(), d.r.end()));
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        EXPECT_EQ(FqRational(d.w(k, j)), FqRational::t_pow(F2(), static_cast<int>(d.r[k])) * d.b(k, j));
    long sum = 0;
    for (long x : d.r) sum += x;
    EXPECT_EQ(sum, latff::ff_logvol(vs));
    EXPECT_EQ(d.r, oracle::ff_r(vs));
    // w is a basis of V, b an R-basis of S
    EXPECT_TRUE(ring_determinant(latff::poly_ring(F2()), d.w).is_constant());
    EXPECT_EQ(latff::ff_logvol(latff::VolumeSpace(F2(), d.b)), latff::ff_logvol(vs));
    EXPECT_EQ(oracle::ff_r(latff::VolumeSpace(F2(), d.b)), d.r);
  }
}

TEST(ShortestVector, MatchesFirstInvariant) {
  sample::Rng rng(43);
  for (int i = 0; i < 60; ++i) {
    latff::VolumeSpace vs = sample::volume_space(rng, F2(), static_cast<int>(sample::uniform(rng, 1, 4)));
    auto sv = latff::shortest_vector(vs);
    EXPECT_EQ(sv.logvol, oracle::ff_r(vs)[0]);
    Matrix<FqPoly> row(1, sv.v.size(), FqPoly::zero(F2()));
    row.set_row(0, sv.v);
    EXPECT_EQ(latff::ff_logvol(vs, th::to_rf(F2(), row)), sv.logvol);
  }
}

TEST(Invariants, Examples) {
  auto a = latff::ff_invariants_and_filtration(latff::VolumeSpace::diagonal(F2(), {-2, -2, -1, 1, 1, 1, 2}));
  std::vector<int> ranks;
  for (const auto& w : a.report.chain) ranks.push_back(w.rank());
  EXPECT_EQ(ranks, (std::vector<int>{0, 2, 3, 6, 7}));
  EXPECT_EQ(a.report.c_values, (std::vector<Rational>{1, 2, 1}));

  auto b = latff::ff_invariants_and_filtration(latff::VolumeSpace::standard(F2(), 2));
  EXPECT_EQ(b.report.chain.size(), 2u);
  EXPECT_EQ(latff::ff_c_value(latff::VolumeSpace::standard(F2(), 2), summand({{"1", "0"}})), 0);

  auto c = latff::ff_invariants_and_filtration(latff::VolumeSpace::diagonal(F2(), {-1, 0}));
  EXPECT_EQ(c.r, (std::vector<long>{-1, 0}));
  ASSERT_EQ(c.report.chain.size(), 3u);
  EXPECT_EQ(c.report.chain[1], summand({{"1", "0"}}));
  EXPECT_EQ(c.report.c_values, (std::vector<Rational>{1}));
}

TEST(Invariants, MinimaArePartialSums) {
  sample::Rng rng(44);
  for (int i = 0; i < 60; ++i) {
    latff::VolumeSpace vs = sample::volume_space(rng, F2(), static_cast<int>(sample::uniform(rng, 1, 4)));
    auto inv = latff::ff_invariants_and_filtration(vs);
    EXPECT_EQ(latff::ff_rank_minima(vs), partial_sums(inv.r));
    for (std::size_t k = 1; k + 1 < inv.report.chain.size(); ++k) {
      const int m = inv.report.chain[k].rank();
      EXPECT_EQ(inv.report.c_values[k - 1], inv.r[m] - inv.r[m - 1]);
      EXPECT_EQ(latff::ff_c_value(vs, inv.report.chain[k]), inv.r[m] - inv.r[m - 1]);
    }
  }
}

TEST(Properties, BasisIndependence) {
  sample::Rng rng(45);
  for (int i = 0; i < 60; ++i) {
    const int n = static_cast<int>(sample::uniform(rng, 2, 4));
    latff::VolumeSpace vs = sample::volume_space(rng, F2(), n);
    latff::FFSummand w = sample::ff_summand(rng, F2(), n, static_cast<int>(sample::uniform(rng, 1, n)));
    const long base = latff::ff_logvol(vs, w);
    Matrix<FqRational> rows = multiply(poly_unimodular(rng, w.rank()), th::to_rf(F2(), w.basis()), FqRational::zero(F2()));
    EXPECT_EQ(latff::ff_logvol(vs, rows), base);
    latff::VolumeSpace other(F2(), multiply(r_unimodular(rng, n), vs.basis(), FqRational::zero(F2())));
    EXPECT_EQ(latff::ff_logvol(other, w), base);
    EXPECT_EQ(latff::ff_logvol(vs, w), oracle::ff_logvol(vs, w.basis()));
  }
}

TEST(Properties, Subadditivity) {
  sample::Rng rng(46);
  for (int i = 0; i < 100; ++i) {
    const int n = static_cast<int>(sample::uniform(rng, 2, 4));
    latff::VolumeSpace vs = sample::volume_space(rng, F2(), n);
    latff::FFSummand a = sample::ff_summand(rng, F2(), n, static_cast<int>(sample::uniform(rng, 1, n - 1)));
    latff::FFSummand b = sample::ff_summand(rng, F2(), n, static_cast<int>(sample::uniform(rng, 1, n - 1)));
    latff::FFSummand m = latff::meet(a, b), j = latff::join(a, b);
    EXPECT_EQ(m.rank() + j.rank(), a.rank() + b.rank());
    EXPECT_TRUE(latff::leq(m, a) && latff::leq(m, b) && latff::leq(a, j) && latff::leq(b, j));
    EXPECT_LE(latff::ff_logvol(vs, m) + latff::ff_logvol(vs, j), latff::ff_logvol(vs, a) + latff::ff_logvol(vs, b));
  }
}

TEST(Properties, FiniteIndexShift) {
  sample::Rng rng(47);
  PolyRing P = latff::poly_ring(F2());
  for (int i = 0; i < 60; ++i) {
    const int n = static_cast<int>(sample::uniform(rng, 2, 4));
    latff::VolumeSpace vs = sample::volume_space(rng, F2(), n);
    latff::FFSummand w = sample::ff_summand(rng, F2(), n, static_cast<int>(sample::uniform(rng, 1, n)));
    const std::size_t m = static_cast<std::size_t>(w.rank());
    Matrix<FqPoly> A(m, m, FqPoly::zero(F2()));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) A(a, b) = sample::poly(rng, F2(), 2);
    FqPoly det = ring_determinant(P, A);
    if (det.is_zero()) continue;
    Matrix<FqPoly> sub = multiply(A, w.basis(), FqPoly::zero(F2()));
    EXPECT_EQ(latff::ff_logvol(vs, th::to_rf(F2(), sub)), latff::ff_logvol(vs, w) + det.degree());
    // dim_F(W/W') from the elementary divisors
    auto snf = smith_normal_form(P, A);
    int dim = 0;
    for (std::size_t k = 0; k < m; ++k) dim += snf.D(k, k).degree();
    EXPECT_EQ(dim, det.degree());
  }
}

TEST(Properties, Homothety) {
  sample::Rng rng(48);
  for (int i = 0; i < 60; ++i) {
    const int n = static_cast<int>(sample::uniform(rng, 2, 4));
    latff::VolumeSpace vs = sample::volume_space(rng, F2(), n);
    FqRational q = sample::laurent(rng, F2(), -3, 3);
    if (q.is_zero()) continue;
    latff::VolumeSpace qs = vs.scaled(q);
    latff::FFSummand w = sample::ff_summand(rng, F2(), n, static_cast<int>(sample::uniform(rng, 1, n - 1)));
    const long nu = -q.degree();
    EXPECT_EQ(latff::ff_logvol(qs, w), w.rank() * nu + latff::ff_logvol(vs, w));
    EXPECT_EQ(latff::ff_c_value(qs, w), latff::ff_c_value(vs, w));
  }
}

TEST(Properties, NeighborBound) {
  // S in S' in tS: logvol_W(S) - rk <= logvol_W(S') <= logvol_W(S)
  sample::Rng rng(49);
  for (int i = 0; i < 60; ++i) {
    const int n = static_cast<int>(sample::uniform(rng, 2, 4));
    latff::VolumeSpace vs = sample::volume_space(rng, F2(), n);
    Matrix<FqRational> b = multiply(r_unimodular(rng, n), vs.basis(), FqRational::zero(F2()));
    for (std::size_t k = 0; k < b.rows(); ++k)
      if (sample::uniform(rng, 0, 1))
        for (std::size_t j = 0; j < b.cols(); ++j) b(k, j) = b(k, j) * FqRational::t_pow(F2(), 1);
    latff::VolumeSpace bigger(F2(), b);
    latff::FFSummand w = sample::ff_summand(rng, F2(), n, static_cast<int>(sample::uniform(rng, 1, n)));
    const long lo = latff::ff_logvol(vs, w), hi = latff::ff_logvol(bigger, w);
    EXPECT_LE(hi, lo);
    EXPECT_GE(hi, lo - w.rank());
  }
}

TEST(Properties, OrbitInvariance) {
  sample::Rng rng(50);
  for (int i = 0; i < 60; ++i) {
    const int n = static_cast<int>(sample::uniform(rng, 2, 4));
    latff::VolumeSpace vs = sample::volume_space(rng, F2(), n);
    auto r = latff::diagonal_basis(vs).r;
    EXPECT_EQ(latff::diagonal_basis(vs.transformed(poly_unimodular(rng, n))).r, r);
  }
}

TEST(Properties, AgreesWithBruteForceFiltration) {
  sample::Rng rng(51);
  for (int i = 0; i < 40; ++i) {
    const int n = static_cast<int>(sample::uniform(rng, 2, 3));
    latff::VolumeSpace vs = sample::volume_space(rng, F2(), n, -2, 2);
    auto fast = latff::ff_invariants_and_filtration(vs);
    auto slow = filtration::canonical_filtration(latff::FFOracle(vs));
    EXPECT_EQ(fast.report.chain, slow.chain);
    EXPECT_EQ(fast.report.c_values, slow.c_values);
    for (int j = 0; j < 4; ++j) {
      latff::FFSummand w = sample::ff_summand(rng, F2(), n, static_cast<int>(sample::uniform(rng, 1, n - 1)));
      EXPECT_EQ(Rational(latff::ff_c_value(vs, w)), oracle::ff_c(vs, w.basis()));
    }
  }
}

TEST(Properties, OtherFields) {
  sample::Rng rng(52);
  for (unsigned q : {3u, 4u, 5u}) {
    const FiniteField& F = FiniteField::get(q);
    for (int i = 0; i < 10; ++i) {
      latff::VolumeSpace vs = sample::volume_space(rng, F, static_cast<int>(sample::uniform(rng, 2, 3)), -2, 2);
      auto d = latff::diagonal_basis(vs);
      EXPECT_EQ(d.r, oracle::ff_r(vs));
    }
  }
}
