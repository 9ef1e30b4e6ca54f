#include "latred/ring.hpp"

#include "latred/error.hpp"

namespace latred {

std::pair<Integer, Integer> IntegerRing::divmod(const Integer& a, const Integer& b) const {
  if (b == 0) fail(ErrorKind::zero_argument, "integer division by zero");
  Integer q, r;
  // r in [0, |b|)
  if (b > 0) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  } else {
    mpz_cdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  return {q, r};
}

Integer IntegerRing::exact_div(const Integer& a, const Integer& b) const {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer IntegerRing::gcd(const Integer& a, const Integer& b) const {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer IntegerRing::lcm(const Integer& a, const Integer& b) const {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

std::pair<FqPoly, FqPoly> PolyRing::divmod(const FqPoly& a, const FqPoly& b) const { return latred::divmod(a, b); }

FqPoly PolyRing::exact_div(const FqPoly& a, const FqPoly& b) const { return latred::exact_div(a, b); }

FqPoly PolyRing::gcd(const FqPoly& a, const FqPoly& b) const { return latred::gcd(a, b); }

FqPoly PolyRing::normalizer(const FqPoly& a) const {
  if (a.is_zero()) return one();
  return FqPoly::constant(*F, F->inv(a.leading()));
}

FqPoly PolyRing::unit_inverse(const FqPoly& u) const { return FqPoly::constant(*F, F->inv(u.leading())); }

FqPoly PolyRing::lcm(const FqPoly& a, const FqPoly& b) const {
  if (a.is_zero() || b.is_zero()) return zero();
  return latred::exact_div(a * b, latred::gcd(a, b)).monic();
}

}  // namespace latred
