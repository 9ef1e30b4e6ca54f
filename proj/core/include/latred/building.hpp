#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latred/error.hpp"
#include "latred/finite_field.hpp"
#include "latred/linalg.hpp"
#include "latred/local.hpp"
#include "latred/matrix.hpp"
#include "latred/numbers.hpp"

namespace latred::building {

inline constexpr int kMaxNeighborRank = 4;
inline constexpr std::uint32_t kMaxNeighborResidue = 5;

template <class L>
struct Context {
  L O;    // local::PAdic or local::DegreeLocal
  int n;
  std::uint32_t residue_size() const { return O.residue_size(); }
};

// Homothety class of an O-lattice, by its canonical basis (columns): the
// representative inside O^n but not inside pi O^n, in column HNF.
template <class L>
struct Vertex {
  local::LMatrix<L> basis;
  friend bool operator==(const Vertex& a, const Vertex& b) { return a.basis == b.basis; }
};

inline std::string entry_str(const Rational& x) { return to_string(x); }
inline std::string entry_str(const FqRational& x) { return x.str(); }

template <class L>
std::string key(const Vertex<L>& v) {
  std::string k;
  for (const auto& x : v.basis.data()) k += entry_str(x) + ",";
  return k;
}

// Generators (columns) of any full-rank lattice, possibly more than n.
template <class L>
Vertex<L> canonical_vertex(const Context<L>& ctx, const local::LMatrix<L>& gens) {
  if (gens.rows() != static_cast<std::size_t>(ctx.n)) fail(ErrorKind::dimension, "basis has the wrong length");
  const long shift = local::min_valuation(ctx.O, gens);
  typename L::Element s = ctx.O.pi_pow(-shift);
  local::LMatrix<L> g = gens.map([&](const typename L::Element& x) -> typename L::Element { return x * s; });
  return {local::column_hnf(ctx.O, std::move(g))};
}

// Proper nonzero subspaces of F^n of dimension k, as reduced echelon rows.
std::vector<std::vector<std::vector<FiniteField::Elem>>> subspaces(const FiniteField& F, int n, int k);

// One neighbor per proper nonzero subspace U of pi^-1 L / L, with its label
// difference dim U.
template <class L>
std::vector<std::pair<Vertex<L>, int>> neighbors(const Context<L>& ctx, const Vertex<L>& v) {
  const std::size_t n = static_cast<std::size_t>(ctx.n);
  if (ctx.n > kMaxNeighborRank || ctx.residue_size() > kMaxNeighborResidue)
    fail(ErrorKind::scale, "neighbor enumeration supports n <= 4 and residue fields of size <= 5");
  const auto K = ctx.O.field();
  const FiniteField& kappa = ctx.O.residue_field();
  const typename L::Element inv_pi = ctx.O.pi_pow(-1);
  std::vector<std::pair<Vertex<L>, int>> out;
  for (int k = 1; k < ctx.n; ++k)
    for (const auto& U : subspaces(kappa, ctx.n, k)) {
      local::LMatrix<L> gens = v.basis;
      local::LMatrix<L> g(n, n + U.size(), K.zero());
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = gens(i, j);
      for (std::size_t u = 0; u < U.size(); ++u) {
        for (std::size_t j = 0; j < n; ++j) {
          if (U[u][j] == 0) continue;
          typename L::Element c = ctx.O.lift(U[u][j]) * inv_pi;
          for (std::size_t i = 0; i < n; ++i) g(i, n + u) += c * gens(i, j);
        }
      }
      out.emplace_back(canonical_vertex(ctx, g), k);
    }
  return out;
}

// (nu det B1 - nu det B2) mod n: dim(L2/L1) for representatives L1 ⊂ L2.
template <class L>
int label_difference(const Context<L>& ctx, const Vertex<L>& v1, const Vertex<L>& v2) {
  const auto K = ctx.O.field();
  long d = ctx.O.valuation(determinant(K, v1.basis)) - ctx.O.valuation(determinant(K, v2.basis));
  long r = d % ctx.n;
  return static_cast<int>(r < 0 ? r + ctx.n : r);
}

// Distinct vertices with representatives L1 ⊂ L2 ⊂ pi^-1 L1: the elementary
// divisors of L1^-1 L2 span at most one step.
template <class L>
bool adjacent(const Context<L>& ctx, const Vertex<L>& v1, const Vertex<L>& v2) {
  if (v1 == v2) return false;
  const auto K = ctx.O.field();
  const long lo = local::min_valuation(ctx.O, multiply(inverse(K, v1.basis), v2.basis, K.zero()));
  const long hi = -local::min_valuation(ctx.O, multiply(inverse(K, v2.basis), v1.basis, K.zero()));
  return hi - lo <= 1;
}

struct ChamberCount {
  Integer formula;
  std::optional<Integer> brute_force;  // present when n <= 4 and r <= 3
  bool verified() const { return !brute_force || *brute_force == formula; }
};

// Chambers containing an edge of label difference k.
ChamberCount count_chambers_on_edge(int n, std::uint32_t r, int k);
// Complete flags of F_r^n through the span of e_1..e_k, counted exhaustively.
Integer brute_force_flags(int n, std::uint32_t r, int k);

std::vector<Rational> apartment_coords(const std::vector<Integer>& m);

struct SimplexDecomposition {
  std::vector<std::vector<Integer>> points;  // p_0 < ... < p_m
  std::vector<Rational> mu;
};

SimplexDecomposition triangulate_point(const std::vector<Rational>& x);
std::vector<Rational> reconstruct(const SimplexDecomposition& d);
// All invariants: 0 < mu_i <= 1, sum 1, consecutive steps in {0,1}^n \ 0,
// p_m <= p_0 + (1,...,1).
bool valid(const SimplexDecomposition& d);
// Decomposition of x + lambda (1,...,1) obtained by moving weight from the
// lowest point p to p + (1,...,1) (or downwards for lambda < 0).
SimplexDecomposition diagonal_shift(const SimplexDecomposition& d, const Rational& lambda);

Rational edge_length_sq(int k, int n);
double edge_length(int k, int n);

}  // namespace latred::building
