#include "latred/valuation.hpp"

#include <algorithm>

#include "latred/error.hpp"

namespace latred {

long Valuation::value() const {
  if (inf_) fail(ErrorKind::range, "valuation of zero is infinite");
  return v_;
}

namespace {

long count_factor(Integer z, const Integer& p) {
  long k = 0;
  while (mpz_divisible_p(z.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t());
    ++k;
  }
  return k;
}

long count_factor(FqPoly z, const FqPoly& p) {
  long k = 0;
  while (true) {
    auto [q, r] = divmod(z, p);
    if (!r.is_zero()) return k;
    z = std::move(q);
    ++k;
  }
}

}  // namespace

Valuation valuation(const Rational& x, const Integer& p) {
  if (!is_prime(p)) fail(ErrorKind::invalid_place, to_string(p) + " is not prime");
  if (x == 0) return Valuation::infinity();
  return Valuation::of(count_factor(x.get_num(), p) - count_factor(x.get_den(), p));
}

Valuation valuation_at_infinity(const FqRational& x) {
  if (x.is_zero()) return Valuation::infinity();
  return Valuation::of(x.den().degree() - x.num().degree());
}

Valuation valuation(const FqRational& x, const FqPoly& p) {
  if (!p.is_monic() || !is_irreducible(p)) fail(ErrorKind::invalid_place, p.str() + " is not a monic irreducible");
  if (x.is_zero()) return Valuation::infinity();
  return Valuation::of(count_factor(x.num(), p) - count_factor(x.den(), p));
}

void check_primes(const std::vector<Integer>& T) {
  for (const auto& p : T)
    if (!is_prime(p)) fail(ErrorKind::invalid_place, to_string(p) + " is not prime");
}

void check_primes(const std::vector<FqPoly>& T) {
  for (const auto& p : T)
    if (!p.is_monic() || !is_irreducible(p)) fail(ErrorKind::invalid_place, p.str() + " is not a monic irreducible");
}

Integer prime_part(const Integer& z, const std::vector<Integer>& T) {
  if (z == 0) fail(ErrorKind::zero_argument, "prime_part of zero");
  check_primes(T);
  Integer out = 1;
  for (std::size_t i = 0; i < T.size(); ++i) {
    const Integer& p = T[i];
    if (std::find(T.begin(), T.begin() + static_cast<long>(i), p) != T.begin() + static_cast<long>(i)) continue;
    out *= ipow(p, static_cast<unsigned long>(count_factor(z, p)));
  }
  return out;
}

FqPoly prime_part(const FqPoly& z, const std::vector<FqPoly>& T) {
  if (z.is_zero()) fail(ErrorKind::zero_argument, "prime_part of zero");
  check_primes(T);
  FqPoly out = FqPoly::constant(*z.field(), 1);
  for (std::size_t i = 0; i < T.size(); ++i) {
    const FqPoly& p = T[i];
    if (std::find(T.begin(), T.begin() + static_cast<long>(i), p) != T.begin() + static_cast<long>(i)) continue;
    out *= pow(p, static_cast<unsigned>(count_factor(z, p)));
  }
  return out;
}

}  // namespace latred
