#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "latred/finite_field.hpp"

namespace latred {

// Dense polynomial over F_q, ascending coefficients, no trailing zeros.
// A default-constructed value is the zero polynomial of whatever field it is
// combined with.
class FqPoly {
 public:
  using Elem = FiniteField::Elem;

  FqPoly() = default;
  FqPoly(const FiniteField& F, std::vector<Elem> coeffs);

  static FqPoly zero(const FiniteField& F) { return FqPoly(F, {}); }
  static FqPoly constant(const FiniteField& F, Elem c);
  static FqPoly monomial(const FiniteField& F, Elem c, int deg);
  static FqPoly t(const FiniteField& F) { return monomial(F, 1, 1); }

  const FiniteField* field() const { return F_; }
  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Elem coeff(int i) const;
  Elem leading() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<Elem>& coeffs() const { return c_; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  FqPoly monic() const;
  FqPoly scaled(Elem a) const;
  FqPoly shifted(int k) const;  // * t^k, k >= 0
  // Lowest power of t dividing this (0 for zero).
  int low_degree() const;

  FqPoly& operator+=(const FqPoly& o);
  FqPoly& operator-=(const FqPoly& o);
  FqPoly& operator*=(const FqPoly& o);
  friend FqPoly operator+(FqPoly a, const FqPoly& b) { return a += b; }
  friend FqPoly operator-(FqPoly a, const FqPoly& b) { return a -= b; }
  friend FqPoly operator*(FqPoly a, const FqPoly& b) { return a *= b; }
  FqPoly operator-() const;

  friend bool operator==(const FqPoly& a, const FqPoly& b) { return a.c_ == b.c_; }
  // Degree first, then coefficients from the top; used for canonical ordering.
  friend std::strong_ordering operator<=>(const FqPoly& a, const FqPoly& b);

  std::string str() const;

 private:
  void trim();
  const FiniteField& fld(const FqPoly& other) const;

  const FiniteField* F_ = nullptr;
  std::vector<Elem> c_;
};

std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b);
FqPoly exact_div(const FqPoly& a, const FqPoly& b);
FqPoly gcd(FqPoly a, FqPoly b);
// g = s a + t b with g monic (or zero).
void xgcd(const FqPoly& a, const FqPoly& b, FqPoly& g, FqPoly& s, FqPoly& t);
FqPoly pow(const FqPoly& a, unsigned e);
bool is_irreducible(const FqPoly& f);

}  // namespace latred
