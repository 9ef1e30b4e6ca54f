#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "latred/building.hpp"
#include "latred/finite_field.hpp"
#include "latred/latff.hpp"
#include "latred/latz.hpp"
#include "latred/sarith.hpp"

// Seeded random instances for self-checks, tests and benchmarks.
namespace latred::sample {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi);  // inclusive
Rational rational(Rng& rng, long num_bound, long den_bound);

// Nonsingular integer matrix, entries in [-bound, bound].
Matrix<Integer> integer_gl(Rng& rng, int n, long bound);
// Nonsingular rational matrix, numerators in [-bound, bound], denominators in [1, den].
Matrix<Rational> rational_gl(Rng& rng, int n, long bound, long den);
// s = M M^T / d for a random nonsingular integer M.
latz::InnerProduct inner_product(Rng& rng, int n, long bound = 3);
// Independent integer rows, saturated.
latz::ZSummand z_summand(Rng& rng, int n, int rank, long bound = 2);

// Laurent polynomial with exponents in [lo, hi].
FqRational laurent(Rng& rng, const FiniteField& F, int lo, int hi);
FqPoly poly(Rng& rng, const FiniteField& F, int max_deg);
Matrix<FqRational> laurent_gl(Rng& rng, const FiniteField& F, int n, int lo, int hi);
// S basis with entry degrees in [lo, hi].
latff::VolumeSpace volume_space(Rng& rng, const FiniteField& F, int n, int lo = -4, int hi = 4);
latff::FFSummand ff_summand(Rng& rng, const FiniteField& F, int n, int rank, int max_deg = 2);

// Vertex of the degree-valuation building.
building::Vertex<local::DegreeLocal> degree_vertex(Rng& rng, const FiniteField& F, int n, int lo = -3, int hi = 3);

// Nonempty subset of the given primes, in order.
std::vector<Integer> z_primes(Rng& rng, const std::vector<Integer>& pool = {2, 3, 5, 7});
std::vector<FqPoly> f_primes(Rng& rng, const FiniteField& F);
sarith::ZStructure z_structure(Rng& rng, int n);
sarith::FStructure f_structure(Rng& rng, const FiniteField& F, int n);

// Rational point with entries of denominator <= den in [-bound, bound].
std::vector<Rational> point(Rng& rng, int n, long bound, long den);

}  // namespace latred::sample
