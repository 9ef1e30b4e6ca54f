#include "latred/sample.hpp"

namespace latred::sample {

namespace {

template <class T, class F>
void fill(Matrix<T>& m, F&& f) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = f();
}

}  // namespace

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational rational(Rng& rng, long num_bound, long den_bound) {
  Rational x(uniform(rng, -num_bound, num_bound), uniform(rng, 1, den_bound));
  x.canonicalize();
  return x;
}

Matrix<Integer> integer_gl(Rng& rng, int n, long bound) {
  const std::size_t nn = static_cast<std::size_t>(n);
  while (true) {
    Matrix<Integer> m(nn, nn, Integer(0));
    fill(m, [&] { return Integer(uniform(rng, -bound, bound)); });
    if (determinant(RationalField{}, to_fractions(IntegerRing{}, m)) != 0) return m;
  }
}

Matrix<Rational> rational_gl(Rng& rng, int n, long bound, long den) {
  const std::size_t nn = static_cast<std::size_t>(n);
  while (true) {
    Matrix<Rational> m(nn, nn, Rational(0));
    fill(m, [&] { return rational(rng, bound, den); });
    if (determinant(RationalField{}, m) != 0) return m;
  }
}

latz::InnerProduct inner_product(Rng& rng, int n, long bound) {
  Matrix<Rational> M = to_fractions(IntegerRing{}, integer_gl(rng, n, bound));
  Matrix<Rational> g = M * M.transpose();
  Rational d(uniform(rng, 1, 4));
  g = g.map([&](const Rational& x) -> Rational { return x / d; });
  return latz::InnerProduct(std::move(g));
}

latz::ZSummand z_summand(Rng& rng, int n, int rank, long bound) {
  const std::size_t nn = static_cast<std::size_t>(n), rr = static_cast<std::size_t>(rank);
  while (true) {
    Matrix<Integer> m(rr, nn, Integer(0));
    fill(m, [&] { return Integer(uniform(rng, -bound, bound)); });
    if (latred::rank(RationalField{}, to_fractions(IntegerRing{}, m)) == rr) return latz::ZSummand(m);
  }
}

FqPoly poly(Rng& rng, const FiniteField& F, int max_deg) {
  std::vector<FiniteField::Elem> c;
  for (int i = 0; i <= max_deg; ++i) c.push_back(static_cast<FiniteField::Elem>(uniform(rng, 0, F.order() - 1)));
  return FqPoly(F, std::move(c));
}

FqRational laurent(Rng& rng, const FiniteField& F, int lo, int hi) {
  return FqRational(poly(rng, F, hi - lo)) * FqRational::t_pow(F, lo);
}

Matrix<FqRational> laurent_gl(Rng& rng, const FiniteField& F, int n, int lo, int hi) {
  const std::size_t nn = static_cast<std::size_t>(n);
  const FqRationalField K{&F};
  while (true) {
    Matrix<FqRational> m(nn, nn, K.zero());
    fill(m, [&] { return laurent(rng, F, lo, hi); });
    if (!determinant(K, m).is_zero()) return m;
  }
}

latff::VolumeSpace volume_space(Rng& rng, const FiniteField& F, int n, int lo, int hi) {
  return latff::VolumeSpace(F, laurent_gl(rng, F, n, lo, hi));
}

latff::FFSummand ff_summand(Rng& rng, const FiniteField& F, int n, int rank, int max_deg) {
  const std::size_t nn = static_cast<std::size_t>(n), rr = static_cast<std::size_t>(rank);
  const FqRationalField K{&F};
  while (true) {
    Matrix<FqPoly> m(rr, nn, FqPoly::zero(F));
    fill(m, [&] { return poly(rng, F, max_deg); });
    if (latred::rank(K, to_fractions(PolyRing{&F}, m)) == rr) return latff::FFSummand(F, m);
  }
}

building::Vertex<local::DegreeLocal> degree_vertex(Rng& rng, const FiniteField& F, int n, int lo, int hi) {
  building::Context<local::DegreeLocal> ctx{{&F}, n};
  return building::canonical_vertex(ctx, laurent_gl(rng, F, n, lo, hi));
}

std::vector<Integer> z_primes(Rng& rng, const std::vector<Integer>& pool) {
  while (true) {
    std::vector<Integer> T;
    for (const auto& p : pool)
      if (uniform(rng, 0, 1)) T.push_back(p);
    if (!T.empty()) return T;
  }
}

std::vector<FqPoly> f_primes(Rng& rng, const FiniteField& F) {
  // monic irreducibles of degree <= 2
  std::vector<FqPoly> pool;
  const auto q = F.order();
  for (FiniteField::Elem a = 0; a < q; ++a) pool.push_back(FqPoly(F, {a, 1}));
  for (FiniteField::Elem a = 0; a < q; ++a)
    for (FiniteField::Elem b = 0; b < q; ++b) {
      FqPoly f(F, {a, b, 1});
      if (is_irreducible(f)) pool.push_back(f);
    }
  std::vector<FqPoly> T;
  while (T.empty()) {
    T.clear();
    for (const auto& p : pool)
      if (uniform(rng, 0, 2) == 0) T.push_back(p);
    if (T.size() > 3) T.resize(3);
  }
  return T;
}

sarith::ZStructure z_structure(Rng& rng, int n) {
  std::vector<Integer> T = z_primes(rng);
  // entries with denominators from T and from outside T
  const std::size_t nn = static_cast<std::size_t>(n);
  while (true) {
    Matrix<Rational> B(nn, nn, Rational(0));
    fill(B, [&] {
      Rational v(uniform(rng, -4, 4));
      long pick = uniform(rng, 0, 3);
      if (pick == 1) v /= T[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(T.size()) - 1))];
      if (pick == 2) v /= 11;
      return v;
    });
    if (determinant(RationalField{}, B) != 0) return {IntegerRing{}, std::move(T), std::move(B)};
  }
}

sarith::FStructure f_structure(Rng& rng, const FiniteField& F, int n) {
  std::vector<FqPoly> T = f_primes(rng, F);
  const std::size_t nn = static_cast<std::size_t>(n);
  const FqRationalField K{&F};
  while (true) {
    Matrix<FqRational> B(nn, nn, K.zero());
    fill(B, [&] {
      FqRational v(poly(rng, F, 1));
      if (uniform(rng, 0, 2) == 1) v /= FqRational(T[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(T.size()) - 1))]);
      return v;
    });
    if (!determinant(K, B).is_zero()) return {PolyRing{&F}, std::move(T), std::move(B)};
  }
}

std::vector<Rational> point(Rng& rng, int n, long bound, long den) {
  std::vector<Rational> x;
  for (int i = 0; i < n; ++i) {
    Rational v(uniform(rng, -bound * den, bound * den), uniform(rng, 1, den));
    v.canonicalize();
    x.push_back(v);
  }
  return x;
}

}  // namespace latred::sample
