#include "latred/building.hpp"
#include "latred/commands.hpp"
#include "latred/filtration.hpp"
#include "latred/sample.hpp"

namespace latred::cli {

namespace {

struct Tally {
  std::string name;
  long cases = 0;
  long failures = 0;
  void check(bool ok) {
    ++cases;
    if (!ok) ++failures;
  }
  json to_json() const { return {{"name", name}, {"cases", cases}, {"failures", failures}}; }
};

}  // namespace

json selfcheck(const Options& o) {
  if (o.scale < 1 || o.scale > 10000) fail(ErrorKind::range, "--scale must lie in 1..10000");
  sample::Rng rng(o.seed);
  const FiniteField& F2 = FiniteField::get(2);
  std::vector<Tally> all;

  // function-field filtration against the brute-force summand search
  Tally ffmin{"ff-minima-vs-enumeration"}, ffc{"ff-c-vs-definition"};
  for (long i = 0; i < o.scale; ++i) {
    const int n = static_cast<int>(sample::uniform(rng, 2, 3));
    latff::VolumeSpace vs = sample::volume_space(rng, F2, n, -2, 2);
    latff::Invariants inv = latff::ff_invariants_and_filtration(vs);
    latff::FFOracle oracle(vs);
    auto mins = filtration::rank_minimizers(oracle);
    long acc = 0;
    bool ok = true;
    for (int m = 1; m <= n; ++m) {
      acc += inv.r[static_cast<std::size_t>(m - 1)];
      ok = ok && mins[static_cast<std::size_t>(m)].first == Rational(acc);
    }
    ffmin.check(ok);
    for (std::size_t j = 0; j < inv.report.c_values.size(); ++j)
      ffc.check(filtration::c_value(oracle, inv.report.chain[j + 1]) == inv.report.c_values[j]);
  }
  all.push_back(ffmin);
  all.push_back(ffc);

  Tally zc{"z-c-vs-definition"};
  for (long i = 0; i < o.scale; ++i) {
    latz::InnerProduct s = sample::inner_product(rng, static_cast<int>(sample::uniform(rng, 2, 3)), 2);
    latz::Report rep = latz::canonical_filtration(s);
    latz::ZOracle oracle(s);
    for (std::size_t j = 0; j < rep.c_values.size(); ++j) {
      const latz::ZSummand& w = rep.chain[j + 1];
      zc.check(filtration::c_value(oracle, w) == rep.c_values[j] && latz::c_value(s, w) == rep.c_values[j]);
    }
  }
  all.push_back(zc);

  Tally chambers{"chamber-count-vs-flags"};
  for (int n = 2; n <= 4; ++n)
    for (std::uint32_t r : {2u, 3u})
      for (int k = 1; k < n; ++k) chambers.check(building::count_chambers_on_edge(n, r, k).verified());
  all.push_back(chambers);

  Tally tri{"triangulation"};
  for (long i = 0; i < o.scale; ++i) {
    auto x = sample::point(rng, static_cast<int>(sample::uniform(rng, 1, 5)), 3, 6);
    auto d = building::triangulate_point(x);
    Rational lambda = sample::rational(rng, 5, 4);
    std::vector<Rational> y = x;
    for (auto& v : y) v += lambda;
    auto s = building::diagonal_shift(d, lambda);
    auto direct = building::triangulate_point(y);
    tri.check(building::valid(d) && building::reconstruct(d) == x && s.points == direct.points && s.mu == direct.mu);
  }
  all.push_back(tri);

  Tally fac{"factorization"};
  for (long i = 0; i < o.scale; ++i) {
    const int n = static_cast<int>(sample::uniform(rng, 1, 3));
    Matrix<Rational> A = sample::rational_gl(rng, n, 5, 12);
    std::vector<Integer> T = sample::z_primes(rng);
    auto f = sarith::factorize(IntegerRing{}, A, T, sarith::Mode::GL);
    fac.check(f.B * f.C == A && sarith::matrix_in_gl_away(IntegerRing{}, f.B, T) && sarith::matrix_in_gl_at(IntegerRing{}, f.C, T));
  }
  all.push_back(fac);

  Tally poset{"localized-summand-roundtrip"};
  for (long i = 0; i < o.scale; ++i) {
    const int n = static_cast<int>(sample::uniform(rng, 2, 3));
    sarith::ZStructure S = sample::z_structure(rng, n);
    latz::ZSummand w = sample::z_summand(rng, n, static_cast<int>(sample::uniform(rng, 1, n - 1)));
    sarith::ZLocSummand W = sarith::loc_summand(IntegerRing{}, to_fractions(IntegerRing{}, w.basis()));
    Matrix<Rational> P = sarith::lattice_basis(S);
    auto y = sarith::lattice_summand(W, S, P);
    poset.check(sarith::localize(IntegerRing{}, y, P).basis == W.basis && static_cast<int>(y.rows()) == W.rank());
  }
  all.push_back(poset);

  json checks = json::array();
  bool passed = true;
  for (const auto& t : all) {
    checks.push_back(t.to_json());
    passed = passed && t.failures == 0;
  }
  return {{"seed", o.seed}, {"scale", o.scale}, {"checks", checks}, {"passed", passed}};
}

}  // namespace latred::cli
