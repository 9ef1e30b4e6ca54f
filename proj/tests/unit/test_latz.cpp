#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "helpers.hpp"
#include "latred/exactmath.hpp"
#include "latred/latz.hpp"
#include "latred/sample.hpp"
#include "oracles.hpp"

using namespace latred;
using th::q;

namespace {

latz::InnerProduct form(const std::vector<std::vector<std::string>>& g) { return latz::InnerProduct(th::qmat(g)); }

latz::InnerProduct diag(const std::vector<std::string>& d) {
  std::vector<std::vector<std::string>> g(d.size(), std::vector<std::string>(d.size(), "0"));
  for (std::size_t i = 0; i < d.size(); ++i) g[i][i] = d[i];
  return form(g);
}

std::vector<std::string> keys(const std::vector<latz::ZSummand>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(w.key());
  std::sort(out.begin(), out.end());
  return out;
}

// unimodular integer matrix from elementary operations
Matrix<Integer> unimodular(sample::Rng& rng, int n) {
  Matrix<Integer> g = Matrix<Integer>::identity(static_cast<std::size_t>(n), Integer(0), Integer(1));
  for (int k = 0; k < 3 * n; ++k) {
    std::size_t i = static_cast<std::size_t>(sample::uniform(rng, 0, n - 1)), j = static_cast<std::size_t>(sample::uniform(rng, 0, n - 1));
    if (i == j) {
      for (std::size_t c = 0; c < g.cols(); ++c) g(i, c) = -g(i, c);
      continue;
    }
    long f = sample::uniform(rng, -2, 2);
    for (std::size_t c = 0; c < g.cols(); ++c) g(i, c) += f * g(j, c);
  }
  return g;
}

latz::InnerProduct pulled_back(const latz::InnerProduct& s, const Matrix<Integer>& phi) {
  Matrix<Rational> p = th::to_q(phi);
  return latz::InnerProduct(multiply(multiply(p, s.gram(), Rational(0)), p.transpose(), Rational(0)));
}

std::vector<Integer> normal(const Matrix<Integer>& w) {
  std::vector<Integer> a = w.row(0), b = w.row(1);
  Matrix<Integer> u(1, 3, Integer(0));
  u(0, 0) = a[1] * b[2] - a[2] * b[1];
  u(0, 1) = a[2] * b[0] - a[0] * b[2];
  u(0, 2) = a[0] * b[1] - a[1] * b[0];
  return oracle::plucker(u);
}

}  // namespace

TEST(GramVolume, Examples) {
  EXPECT_EQ(latz::volume_sq(diag({"1", "1"}), latz::ZSummand(th::zmat({{1, 1}}))), 2);
  EXPECT_EQ(latz::logvol(diag({"1", "1"}), latz::ZSummand(th::zmat({{1, 1}}))), LogValue::log_of(2, 2));
  EXPECT_EQ(latz::volume_sq(diag({"1", "4"}), latz::ZSummand(th::zmat({{0, 1}}))), 4);
  EXPECT_EQ(latz::logvol(diag({"1", "4"}), latz::ZSummand(th::zmat({{0, 1}}))), LogValue::log_of(2));
  EXPECT_EQ(latz::volume_sq(diag({"1", "1"}), latz::ZSummand::full(2)), 1);
  EXPECT_TRUE(latz::logvol(diag({"1", "1"}), latz::ZSummand::full(2)).is_zero());
}

TEST(GramVolume, RankDeficientBasis) { EXPECT_MATH_ERROR(latz::ZSummand(th::zmat({{1, 2}, {2, 4}})), rank_deficiency); }

TEST(InnerProduct, RejectsNonDefinite) {
  EXPECT_MATH_ERROR(form({{"1", "2"}, {"2", "1"}}), definiteness);
  EXPECT_MATH_ERROR(form({{"1", "0"}, {"1", "1"}}), definiteness);
  EXPECT_MATH_ERROR(form({{"0", "0"}, {"0", "1"}}), definiteness);
}

TEST(EnumerateSummands, Examples) {
  // bounds on ln vol translate to vol^2 <= e^(2C); the rationals below sit
  // between every attained vol^2 and the next one
  auto six = latz::enumerate_summands(diag({"1", "1"}), q("2718/1000"));  // C = 0.5
  std::vector<latz::ZSummand> expect{latz::ZSummand::zero(2),
                                     latz::ZSummand(th::zmat({{1, 0}})),
                                     latz::ZSummand(th::zmat({{0, 1}})),
                                     latz::ZSummand(th::zmat({{1, 1}})),
                                     latz::ZSummand(th::zmat({{1, -1}})),
                                     latz::ZSummand::full(2)};
  EXPECT_EQ(keys(six), keys(expect));

  // C = -0.1: even the zero module (ln vol 0) is excluded
  EXPECT_TRUE(latz::enumerate_summands(diag({"1", "1"}), q("8187/10000")).empty());
  auto unit = latz::enumerate_summands(diag({"1", "1"}), Rational(1));  // C = 0
  EXPECT_EQ(keys(unit), keys({latz::ZSummand::zero(2), latz::ZSummand(th::zmat({{1, 0}})),
                              latz::ZSummand(th::zmat({{0, 1}})), latz::ZSummand::full(2)}));

  auto two = latz::enumerate_summands(diag({"1", "4"}), Rational(1));  // C = 0
  EXPECT_EQ(keys(two), keys({latz::ZSummand::zero(2), latz::ZSummand(th::zmat({{1, 0}}))}));
}

TEST(EnumerateSummands, ScaleLimit) {
  std::vector<std::string> ones(7, "1");
  EXPECT_MATH_ERROR(latz::enumerate_summands(diag(ones), Rational(1)), scale);
}

TEST(EnumerateSummands, CompleteAgainstIndependentSearch) {
  sample::Rng rng(31);
  int done = 0;
  while (done < 40) {
    const int n = static_cast<int>(sample::uniform(rng, 2, 3));
    latz::InnerProduct s = sample::inner_product(rng, n, 2);
    bool small = true;
    for (const auto& x : s.gram().data()) small = small && abs(x) <= 4;
    if (!small) continue;
    ++done;
    const Rational det = oracle::leibniz_det(s.gram());
    for (const Rational& X : std::vector<Rational>{Rational(2), Rational(5), Rational(det * 3)}) {
      std::set<std::vector<Integer>> lib1, lib2, ref1, ref2;
      for (const auto& w : latz::enumerate_summands(s, X)) {
        if (w.rank() == 1) lib1.insert(oracle::plucker(w.basis()));
        if (n == 3 && w.rank() == 2) lib2.insert(normal(w.basis()));
      }
      for (const auto& v : oracle::primitive_vectors(s.gram(), X)) ref1.insert(v);
      if (n == 3) {
        Matrix<Rational> inv = inverse(RationalField{}, s.gram());
        for (const auto& u : oracle::primitive_vectors(inv, X / det)) ref2.insert(u);
      }
      EXPECT_EQ(lib1, ref1);
      EXPECT_EQ(lib2, ref2);
    }
  }
}

TEST(CanonicalFiltrationZ, Examples) {
  auto a = latz::canonical_filtration(diag({"1", "4"}));
  ASSERT_EQ(a.chain.size(), 3u);
  EXPECT_EQ(a.chain[1], latz::ZSummand(th::zmat({{1, 0}})));
  EXPECT_EQ(a.c_values[0], LogValue::log_of(2));

  auto b = latz::canonical_filtration(diag({"1", "1"}));
  EXPECT_EQ(b.chain.size(), 2u);

  auto c = latz::canonical_filtration(diag({"1", "1", "100"}));
  ASSERT_EQ(c.chain.size(), 3u);
  EXPECT_EQ(c.chain[1], latz::ZSummand(th::zmat({{1, 0, 0}, {0, 1, 0}})));
  EXPECT_EQ(c.c_values[0], LogValue::log_of(100, 2));
}

TEST(SpdDistance, Examples) {
  latz::InnerProduct id = diag({"1", "1"});
  EXPECT_NEAR(latz::spd_distance(id, id), 0.0, 1e-9);
  // e^2 and e to 16 digits; the induced error is far below the tolerance
  EXPECT_NEAR(latz::spd_distance(id, diag({"7389056098930650/1000000000000000", "7389056098930650/1000000000000000"})), 2 * std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(latz::spd_distance(id, diag({"2718281828459045/1000000000000000", "1"})), 1.0, 1e-9);
  // conformal ray, rational factor
  EXPECT_NEAR(latz::spd_distance(id, diag({"3", "3"})), std::log(3.0) * std::sqrt(2.0), 1e-9);
}

TEST(SpdDistance, SymmetricAndInvariant) {
  sample::Rng rng(32);
  for (int i = 0; i < 40; ++i) {
    const int n = static_cast<int>(sample::uniform(rng, 2, 3));
    latz::InnerProduct a = sample::inner_product(rng, n), b = sample::inner_product(rng, n);
    double d = latz::spd_distance(a, b);
    EXPECT_NEAR(d, latz::spd_distance(b, a), 1e-8);
    Matrix<Integer> g = unimodular(rng, n);
    EXPECT_NEAR(d, latz::spd_distance(pulled_back(a, g), pulled_back(b, g)), 1e-7 * (1 + d));
  }
}

TEST(Properties, Subadditivity) {
  sample::Rng rng(33);
  for (int i = 0; i < 200; ++i) {
    const int n = static_cast<int>(sample::uniform(rng, 2, 4));
    latz::InnerProduct s = sample::inner_product(rng, n);
    latz::ZSummand a = sample::z_summand(rng, n, static_cast<int>(sample::uniform(rng, 1, n - 1)));
    latz::ZSummand b = sample::z_summand(rng, n, static_cast<int>(sample::uniform(rng, 1, n - 1)));
    latz::ZSummand m = latz::meet(a, b), j = latz::join(a, b);
    EXPECT_EQ(m.rank() + j.rank(), a.rank() + b.rank());
    EXPECT_TRUE(latz::leq(m, a) && latz::leq(m, b) && latz::leq(a, j) && latz::leq(b, j));
    EXPECT_TRUE(oracle::same_span(th::to_q(j.basis()), oracle::span_join(th::to_q(a.basis()), th::to_q(b.basis()))));
    if (m.rank() > 0) EXPECT_TRUE(oracle::same_span(th::to_q(m.basis()), oracle::span_meet(th::to_q(a.basis()), th::to_q(b.basis()))));
    EXPECT_LE(latz::volume_sq(s, m) * latz::volume_sq(s, j), latz::volume_sq(s, a) * latz::volume_sq(s, b));
  }
}

TEST(Properties, Equivariance) {
  sample::Rng rng(34);
  for (int i = 0; i < 40; ++i) {
    const int n = static_cast<int>(sample::uniform(rng, 2, 3));
    latz::InnerProduct s = sample::inner_product(rng, n);
    Matrix<Integer> phi = unimodular(rng, n);
    latz::Report a = latz::canonical_filtration(s);
    latz::Report b = latz::canonical_filtration(pulled_back(s, phi));
    ASSERT_EQ(a.chain.size(), b.chain.size());
    for (std::size_t k = 0; k < a.chain.size(); ++k) {
      if (b.chain[k].rank() == 0) continue;
      latz::ZSummand image(multiply(b.chain[k].basis(), phi, Integer(0)));
      EXPECT_EQ(image, a.chain[k]);
    }
    for (std::size_t k = 0; k < a.c_values.size(); ++k) EXPECT_EQ(a.c_values[k], b.c_values[k]);
  }
}

TEST(Properties, Lipschitz) {
  sample::Rng rng(35);
  for (int i = 0; i < 60; ++i) {
    const int n = static_cast<int>(sample::uniform(rng, 2, 3));
    latz::InnerProduct s = sample::inner_product(rng, n), t = sample::inner_product(rng, n);
    const double d = latz::spd_distance(s, t);
    latz::ZSummand w = sample::z_summand(rng, n, static_cast<int>(sample::uniform(rng, 1, n - 1)));
    double dv = std::fabs(latz::logvol(s, w).to_double() - latz::logvol(t, w).to_double());
    EXPECT_LE(dv, n * d + 1e-6);
    double dc = std::fabs(latz::c_value(s, w).to_double() - latz::c_value(t, w).to_double());
    EXPECT_LE(dc, 4 * n * d + 1e-6);
  }
}

TEST(Properties, Scaling) {
  sample::Rng rng(36);
  for (int i = 0; i < 60; ++i) {
    const int n = static_cast<int>(sample::uniform(rng, 2, 3));
    latz::InnerProduct s = sample::inner_product(rng, n);
    Rational lambda = abs(sample::rational(rng, 9, 7));
    if (lambda == 0) lambda = 1;
    latz::InnerProduct ls(s.gram().map([&](const Rational& x) -> Rational { return x * lambda; }));
    latz::ZSummand w = sample::z_summand(rng, n, static_cast<int>(sample::uniform(rng, 1, n - 1)));
    EXPECT_EQ(latz::volume_sq(ls, w), ipow(lambda, w.rank()) * latz::volume_sq(s, w));
    EXPECT_EQ(latz::c_value(ls, w), latz::c_value(s, w));
  }
}

TEST(CValueZ, MatchesDefinitionOracle) {
  sample::Rng rng(37);
  for (int i = 0; i < 60; ++i) {
    const int n = static_cast<int>(sample::uniform(rng, 2, 3));
    latz::InnerProduct s = sample::inner_product(rng, n, 2);
    latz::ZSummand w = sample::z_summand(rng, n, static_cast<int>(sample::uniform(rng, 1, n - 1)));
    EXPECT_EQ(latz::c_value(s, w), oracle::z_c(s, w.basis()));
  }
}
