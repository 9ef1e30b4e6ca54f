#include "latred/local.hpp"

#include "latred/valuation.hpp"

namespace latred::local {

long PAdic::valuation(const Rational& x) const { return latred::valuation(x, p).value(); }

Rational PAdic::pi_pow(long k) const { return ipow(Rational(p), k); }

Rational PAdic::reduce(const Rational& x, long a) const {
  if (x == 0) return 0;
  const long v = valuation(x);
  if (v >= a) return 0;
  Rational y = x / pi_pow(v);
  Integer mod = ipow(p, static_cast<unsigned long>(a - v));
  Integer inv;
  mpz_invert(inv.get_mpz_t(), y.get_den_mpz_t(), mod.get_mpz_t());
  Integer r = y.get_num() * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
  return Rational(r) * pi_pow(v);
}

std::uint32_t PAdic::residue_size() const {
  if (!p.fits_uint_p() || !FiniteField::supported(p.get_ui())) fail(ErrorKind::scale, "residue field too large");
  return static_cast<std::uint32_t>(p.get_ui());
}

const FiniteField& PAdic::residue_field() const { return FiniteField::get(residue_size()); }

FiniteField::Elem PAdic::residue(const Rational& x) const {
  Rational r = reduce(x, 1);
  return static_cast<FiniteField::Elem>(r.get_num().get_ui());
}

long DegreeLocal::valuation(const FqRational& x) const { return valuation_at_infinity(x).value(); }

FqPoly poly_part(const FqRational& x) {
  if (x.is_zero()) return x.num();
  return divmod(x.num(), x.den()).first;
}

// Terms c_e t^e of the expansion at infinity with e >= 1 - a.
FqRational DegreeLocal::reduce(const FqRational& x, long a) const {
  if (x.is_zero()) return x;
  const int s = static_cast<int>(a - 1);
  return FqRational(poly_part(x * pi_pow(-s))) * pi_pow(s);
}

FiniteField::Elem DegreeLocal::residue(const FqRational& x) const {
  if (x.is_zero() || x.num().degree() != x.den().degree()) return 0;
  return F->div(x.num().leading(), x.den().leading());
}

}  // namespace latred::local
