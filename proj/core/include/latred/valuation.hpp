#pragma once

#include <compare>
#include <string>
#include <vector>

#include "latred/numbers.hpp"
#include "latred/rational_function.hpp"

namespace latred {

// Discrete valuation value; +infinity for zero.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  static Valuation of(long v) { return Valuation(v); }

  bool is_infinite() const { return inf_; }
  long value() const;

  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.inf_ || b.inf_) return infinity();
    return of(a.v_ + b.v_);
  }
  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
    return a.v_ <=> b.v_;
  }
  std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

 private:
  Valuation() = default;
  explicit Valuation(long v) : inf_(false), v_(v) {}
  bool inf_ = true;
  long v_ = 0;
};

// p-adic valuation on Q; p must be prime.
Valuation valuation(const Rational& x, const Integer& p);
// Degree valuation deg(den) - deg(num) on F_q(t).
Valuation valuation_at_infinity(const FqRational& x);
// Valuation at a monic irreducible polynomial.
Valuation valuation(const FqRational& x, const FqPoly& p);

// The part of z supported on T, with multiplicity; positive (resp. monic).
Integer prime_part(const Integer& z, const std::vector<Integer>& T);
FqPoly prime_part(const FqPoly& z, const std::vector<FqPoly>& T);

void check_primes(const std::vector<Integer>& T);
void check_primes(const std::vector<FqPoly>& T);

}  // namespace latred
