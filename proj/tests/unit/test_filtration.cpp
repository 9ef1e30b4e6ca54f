#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>

#include "helpers.hpp"
#include "latred/filtration.hpp"
#include "latred/latff.hpp"
#include "latred/latz.hpp"
#include "latred/sample.hpp"
#include "oracles.hpp"

using namespace latred;
using filtration::GradedPoint;
using th::q;

namespace {

std::vector<int> path_ranks(const std::vector<std::string>& values) {
  std::vector<GradedPoint<Rational>> pts;
  for (std::size_t i = 0; i < values.size(); ++i) pts.push_back({static_cast<int>(i), q(values[i])});
  auto plot = filtration::canonical_plot(pts, static_cast<int>(values.size()) - 1);
  std::vector<int> out;
  for (const auto& p : plot.path) out.push_back(p.rank);
  return out;
}

// Finite poset given by a table; used to drive the engine directly.
struct TableOracle {
  using Handle = int;
  using Value = Rational;
  int n;
  std::vector<int> ranks;
  std::vector<Rational> vols;
  std::function<bool(int, int)> le;
  int top_rank() const { return n; }
  int zero() const { return 0; }
  int top() const { return static_cast<int>(ranks.size()) - 1; }
  int rank(int h) const { return ranks[static_cast<std::size_t>(h)]; }
  Rational logvol(int h) const { return vols[static_cast<std::size_t>(h)]; }
  std::vector<int> summands(int m, const Rational& b) const {
    std::vector<int> out;
    for (std::size_t h = 0; h < ranks.size(); ++h)
      if (ranks[h] == m && vols[h] <= b) out.push_back(static_cast<int>(h));
    return out;
  }
  bool leq(int a, int b) const { return le(a, b); }
  int meet(int a, int b) const { return leq(a, b) ? a : (leq(b, a) ? b : 0); }
  int join(int a, int b) const { return leq(a, b) ? b : (leq(b, a) ? a : top()); }
};

}  // namespace

TEST(CanonicalPlot, SevenRankPath) {
  EXPECT_EQ(path_ranks({"0", "-3/2", "-2", "-7/2", "-37/10", "-3", "-3/2", "0"}), (std::vector<int>{0, 1, 3, 4, 5, 7}));
}

TEST(CanonicalPlot, RankOne) { EXPECT_EQ(path_ranks({"0", "0"}), (std::vector<int>{0, 1})); }

TEST(CanonicalPlot, FromIncrementVector) {
  // partial sums of r = (-2,-2,-1,1,1,1,2)
  EXPECT_EQ(path_ranks({"0", "-2", "-4", "-5", "-4", "-3", "-2", "0"}), (std::vector<int>{0, 2, 3, 6, 7}));
  // the sequence as printed alongside it gives the same interior vertices
  EXPECT_EQ(path_ranks({"0", "-2", "-4", "-5", "-3", "-1", "0", "2"}), (std::vector<int>{0, 2, 3, 6, 7}));
}

TEST(CanonicalPlot, PointsOnASegmentAreOmitted) {
  EXPECT_EQ(path_ranks({"0", "1", "2"}), (std::vector<int>{0, 2}));
  EXPECT_EQ(path_ranks({"0", "-1", "-1", "0"}), (std::vector<int>{0, 1, 2, 3}));
}

TEST(CanonicalPlot, IncompletePlot) {
  std::vector<GradedPoint<Rational>> pts{{0, Rational(0)}, {1, Rational(-1)}};
  EXPECT_MATH_ERROR(filtration::canonical_plot(pts, 2), incomplete_plot);
  std::vector<GradedPoint<Rational>> shifted{{0, Rational(1)}, {1, Rational(-1)}, {2, Rational(0)}};
  EXPECT_MATH_ERROR(filtration::canonical_plot(shifted, 2), incomplete_plot);
}

TEST(CanonicalPlot, SlopesStrictlyIncrease) {
  sample::Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    const int n = static_cast<int>(sample::uniform(rng, 1, 8));
    std::vector<GradedPoint<Rational>> pts{{0, Rational(0)}};
    for (int m = 1; m <= n; ++m) pts.push_back({m, sample::rational(rng, 20, 4)});
    auto plot = filtration::canonical_plot(pts, n);
    for (std::size_t k = 2; k < plot.path.size(); ++k)
      EXPECT_LT(filtration::slope(plot.path[k - 1], plot.path[k - 2]), filtration::slope(plot.path[k], plot.path[k - 1]));
    // every minimum lies strictly above the path unless it is a vertex
    for (const auto& p : plot.minima) {
      auto hi = std::find_if(plot.path.begin(), plot.path.end(), [&](const auto& v) { return v.rank >= p.rank; });
      ASSERT_NE(hi, plot.path.end());
      if (hi->rank == p.rank) continue;
      const auto& lo = *(hi - 1);
      Rational on_line = lo.logvol + filtration::slope(*hi, lo) * (p.rank - lo.rank);
      EXPECT_GE(p.logvol, on_line);
    }
  }
}

TEST(CValue, IntegerExamples) {
  latz::ZOracle diag14(latz::InnerProduct(th::qmat({{"1", "0"}, {"0", "4"}})));
  EXPECT_EQ(filtration::c_value(diag14, latz::ZSummand(th::zmat({{1, 0}}))), LogValue::log_of(2));
  latz::ZOracle id(latz::InnerProduct(th::qmat({{"1", "0"}, {"0", "1"}})));
  EXPECT_EQ(filtration::c_value(id, latz::ZSummand(th::zmat({{1, 0}}))), LogValue());
}

TEST(CValue, FunctionFieldExample) {
  const FiniteField& F = FiniteField::get(2);
  latff::VolumeSpace vs = latff::VolumeSpace::diagonal(F, {-2, -2, -1, 1, 1, 1, 2});
  latff::Invariants inv = latff::ff_invariants_and_filtration(vs);
  ASSERT_EQ(inv.report.chain.size(), 5u);
  EXPECT_EQ(inv.report.chain[1].rank(), 2);
  EXPECT_EQ(filtration::c_from_minima(inv.report.minima, 2), 1);
  EXPECT_EQ(oracle::ff_c(vs, inv.report.chain[1].basis()), 1);
}

TEST(CValue, BoundaryModules) {
  latz::ZOracle o(latz::InnerProduct(th::qmat({{"1", "0"}, {"0", "4"}})));
  EXPECT_MATH_ERROR(filtration::c_value(o, o.zero()), boundary_module);
  EXPECT_MATH_ERROR(filtration::c_value(o, o.top()), boundary_module);
}

TEST(CanonicalFiltration, IntegerExamples) {
  latz::ZOracle diag14(latz::InnerProduct(th::qmat({{"1", "0"}, {"0", "4"}})));
  auto rep = filtration::canonical_filtration(diag14);
  ASSERT_EQ(rep.chain.size(), 3u);
  EXPECT_EQ(rep.chain[1], latz::ZSummand(th::zmat({{1, 0}})));
  ASSERT_EQ(rep.c_values.size(), 1u);
  EXPECT_EQ(rep.c_values[0], LogValue::log_of(2));

  latz::ZOracle id(latz::InnerProduct(th::qmat({{"1", "0"}, {"0", "1"}})));
  auto triv = filtration::canonical_filtration(id);
  EXPECT_EQ(triv.chain.size(), 2u);
  EXPECT_TRUE(triv.c_values.empty());
}

TEST(CanonicalFiltration, FunctionFieldExample) {
  const FiniteField& F = FiniteField::get(2);
  latff::VolumeSpace vs = latff::VolumeSpace::diagonal(F, {-2, 0});
  auto rep = filtration::canonical_filtration(latff::FFOracle(vs));
  ASSERT_EQ(rep.chain.size(), 3u);
  EXPECT_EQ(rep.chain[1].basis(), th::pmat(F, {{"1", "0"}}));
  EXPECT_EQ(rep.c_values[0], 2);
}

TEST(CanonicalFiltration, TiedMinimaOnThePath) {
  // two incomparable rank-1 elements share the minimal volume
  TableOracle o{2, {0, 1, 1, 2}, {Rational(0), Rational(-1), Rational(-1), Rational(0)},
                [](int a, int b) { return a == b || a == 0 || b == 3; }};
  EXPECT_MATH_ERROR(filtration::canonical_filtration(o), violated_uniqueness);
}

TEST(CanonicalFiltration, TableOracleChain) {
  // 0 < a < top, 0 < b < top with a lower than b
  TableOracle o{2, {0, 1, 1, 2}, {Rational(0), Rational(-2), Rational(1), Rational(0)},
                [](int a, int b) { return a == b || a == 0 || b == 3; }};
  auto rep = filtration::canonical_filtration(o);
  ASSERT_EQ(rep.chain.size(), 3u);
  EXPECT_EQ(rep.chain[1], 1);
  EXPECT_EQ(rep.c_values[0], 4);
  EXPECT_EQ(filtration::c_value(o, 1), 4);
  EXPECT_EQ(filtration::c_value(o, 2), -2);
}

// Integer forms with small Gram entries: the filtration from per-rank minima
// agrees with evaluating c on every summand below the hull bound, and with
// the independent minima oracle.
TEST(CanonicalFiltration, OracleEquivalenceSmallIntegerForms) {
  sample::Rng rng(22);
  int done = 0;
  while (done < 40) {
    const int n = static_cast<int>(sample::uniform(rng, 2, 3));
    latz::InnerProduct s = sample::inner_product(rng, n, 2);
    bool small = true;
    for (const auto& x : s.gram().data()) small = small && abs(x) <= 8;
    if (!small) continue;
    ++done;
    latz::Report rep = latz::canonical_filtration(s);
    std::vector<Rational> mins = oracle::z_minima_sq(s);
    ASSERT_EQ(mins.size(), rep.minima.size());
    for (std::size_t m = 0; m < mins.size(); ++m) EXPECT_EQ(LogValue::log_of(mins[m], 2), rep.minima[m].logvol);

    Rational top = latz::volume_sq(s, latz::ZSummand::full(n));
    Rational bound = top > 1 ? top : Rational(1);
    latz::ZOracle o(s);
    std::vector<latz::ZSummand> positive;
    for (const auto& w : latz::enumerate_summands(s, bound)) {
      if (w.rank() == 0 || w.rank() == n) continue;
      LogValue c = filtration::c_value(o, w);
      EXPECT_EQ(c, oracle::z_c(s, w.basis()));
      if (c.sign() > 0) positive.push_back(w);
    }
    std::sort(positive.begin(), positive.end(), [](const auto& a, const auto& b) { return a.rank() < b.rank(); });
    std::vector<latz::ZSummand> interior(rep.chain.begin() + 1, rep.chain.end() - 1);
    EXPECT_EQ(positive, interior);
  }
}

TEST(CanonicalFiltration, ChainAndIncomparability) {
  sample::Rng rng(23);
  for (int i = 0; i < 30; ++i) {
    const int n = static_cast<int>(sample::uniform(rng, 2, 3));
    latz::InnerProduct s = sample::inner_product(rng, n, 3);
    latz::Report rep = latz::canonical_filtration(s);
    for (std::size_t k = 1; k < rep.chain.size(); ++k) {
      EXPECT_TRUE(latz::leq(rep.chain[k - 1], rep.chain[k]));
      EXPECT_LT(rep.chain[k - 1].rank(), rep.chain[k].rank());
    }
    for (const auto& c : rep.c_values) EXPECT_GT(c.sign(), 0);

    auto all = latz::enumerate_summands(s, Rational(8));
    all.insert(all.end(), rep.chain.begin(), rep.chain.end());
    std::map<std::string, LogValue> c;
    for (const auto& w : all)
      if (w.rank() > 0 && w.rank() < n) c.emplace(w.key(), latz::c_value(s, w));
    for (const auto& a : all)
      for (const auto& b : all) {
        if (a.rank() == 0 || a.rank() == n || b.rank() == 0 || b.rank() == n) continue;
        if (latz::leq(a, b) || latz::leq(b, a)) continue;
        EXPECT_FALSE(c.at(a.key()).sign() > 0 && c.at(b.key()).sign() > 0);
      }
  }
}

TEST(CanonicalFiltration, FunctionFieldMembershipIffPositive) {
  sample::Rng rng(24);
  const FiniteField& F = FiniteField::get(2);
  for (int i = 0; i < 60; ++i) {
    const int n = static_cast<int>(sample::uniform(rng, 2, 3));
    latff::VolumeSpace vs = sample::volume_space(rng, F, n, -2, 2);
    latff::Invariants inv = latff::ff_invariants_and_filtration(vs);
    EXPECT_EQ(inv.r, oracle::ff_r(vs));
    for (std::size_t k = 1; k + 1 < inv.report.chain.size(); ++k)
      EXPECT_GT(oracle::ff_c(vs, inv.report.chain[k].basis()), 0);
    for (int j = 0; j < 5; ++j) {
      latff::FFSummand w = sample::ff_summand(rng, F, n, static_cast<int>(sample::uniform(rng, 1, n - 1)));
      bool member = std::find(inv.report.chain.begin(), inv.report.chain.end(), w) != inv.report.chain.end();
      EXPECT_EQ(oracle::ff_c(vs, w.basis()) > 0, member);
    }
  }
}
