#pragma once

#include <string>

#include "latred/poly.hpp"

namespace latred {

// Element of F_q(t): num/den in lowest terms, den monic.
class FqRational {
 public:
  FqRational() = default;
  FqRational(const FqPoly& p);  // NOLINT: polynomials embed
  FqRational(const FqPoly& num, const FqPoly& den);

  static FqRational zero(const FiniteField& F) { return FqRational(FqPoly::zero(F)); }
  static FqRational one(const FiniteField& F) { return FqRational(FqPoly::constant(F, 1)); }
  // t^k for any integer k.
  static FqRational t_pow(const FiniteField& F, int k);

  const FqPoly& num() const { return num_; }
  const FqPoly& den() const { return den_; }
  const FiniteField* field() const { return num_.field() ? num_.field() : den_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  // deg num - deg den; undefined for zero.
  int degree() const { return num_.degree() - den_.degree(); }

  FqRational& operator+=(const FqRational& o);
  FqRational& operator-=(const FqRational& o);
  FqRational& operator*=(const FqRational& o);
  FqRational& operator/=(const FqRational& o);
  friend FqRational operator+(FqRational a, const FqRational& b) { return a += b; }
  friend FqRational operator-(FqRational a, const FqRational& b) { return a -= b; }
  friend FqRational operator*(FqRational a, const FqRational& b) { return a *= b; }
  friend FqRational operator/(FqRational a, const FqRational& b) { return a /= b; }
  FqRational operator-() const;
  FqRational inverse() const;

  friend bool operator==(const FqRational& a, const FqRational& b) {
    return a.num_ == b.num_ && (a.num_.is_zero() || a.den_ == b.den_);
  }

  std::string str() const;

 private:
  void normalize();

  FqPoly num_;
  FqPoly den_;
};

// Accepts integers, t, + - * / ^ (integer exponents, negative allowed) and
// parentheses. Over a prime field an integer literal is read mod p; over an
// extension field it must be an element code 0..q-1.
FqRational parse_rational_function(const FiniteField& F, const std::string& s);

}  // namespace latred
