#pragma once

#include <string>
#include <utility>

#include "latred/numbers.hpp"
#include "latred/rational_function.hpp"

namespace latred {

// Context objects for the generic algorithms. A Euclidean ring supplies
// zero/one, division with a canonical remainder, unit normalization and its
// field of fractions; a field supplies zero/one/is_zero.

struct RationalField {
  using Element = Rational;
  Element zero() const { return 0; }
  Element one() const { return 1; }
  static bool is_zero(const Element& x) { return sgn(x) == 0; }
  std::string name() const { return "Q"; }
};

struct FqRationalField {
  using Element = FqRational;
  const FiniteField* F;
  Element zero() const { return FqRational::zero(*F); }
  Element one() const { return FqRational::one(*F); }
  static bool is_zero(const Element& x) { return x.is_zero(); }
  std::string name() const { return "Fq(t)"; }
};

struct IntegerRing {
  using Element = Integer;
  using Fraction = Rational;
  using Field = RationalField;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Field field() const { return {}; }
  static bool is_zero(const Element& x) { return sgn(x) == 0; }
  // r in [0, |b|).
  std::pair<Element, Element> divmod(const Element& a, const Element& b) const;
  Element exact_div(const Element& a, const Element& b) const;
  Element gcd(const Element& a, const Element& b) const;
  // Unit u with u*a in canonical form (a > 0).
  Element normalizer(const Element& a) const { return sgn(a) < 0 ? -1 : 1; }
  Element unit_inverse(const Element& u) const { return u; }
  bool is_unit(const Element& a) const { return abs(a) == 1; }
  // Euclidean size comparison.
  bool smaller(const Element& a, const Element& b) const { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }
  Fraction embed(const Element& a) const { return Fraction(a); }
  Element numerator(const Fraction& x) const { return x.get_num(); }
  Element denominator(const Fraction& x) const { return x.get_den(); }
  Element lcm(const Element& a, const Element& b) const;
  std::string name() const { return "Z"; }
};

struct PolyRing {
  using Element = FqPoly;
  using Fraction = FqRational;
  using Field = FqRationalField;
  const FiniteField* F;

  Element zero() const { return FqPoly::zero(*F); }
  Element one() const { return FqPoly::constant(*F, 1); }
  Field field() const { return {F}; }
  static bool is_zero(const Element& x) { return x.is_zero(); }
  std::pair<Element, Element> divmod(const Element& a, const Element& b) const;
  Element exact_div(const Element& a, const Element& b) const;
  Element gcd(const Element& a, const Element& b) const;
  Element normalizer(const Element& a) const;
  Element unit_inverse(const Element& u) const;
  bool is_unit(const Element& a) const { return a.degree() == 0; }
  bool smaller(const Element& a, const Element& b) const { return a.degree() < b.degree(); }
  Fraction embed(const Element& a) const { return Fraction(a); }
  Element numerator(const Fraction& x) const { return x.num(); }
  Element denominator(const Fraction& x) const { return x.den(); }
  Element lcm(const Element& a, const Element& b) const;
  std::string name() const { return "Fq[t]"; }
};

}  // namespace latred
