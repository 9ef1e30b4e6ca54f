#pragma once

#include <cstdint>
#include <vector>

namespace latred {

// F_q for q = p prime (p <= 2^16) or q = p^e <= 256.
// Elements are integers 0..q-1: the base-p digits are the coordinates in the
// polynomial basis 1, a, a^2, ... over F_p.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  // Interned; the reference stays valid for the life of the process.
  static const FiniteField& get(std::uint32_t q);
  static bool supported(std::uint64_t q);

  std::uint32_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return e_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  // Image of the integer k under Z -> F_q.
  Elem from_integer(long long k) const;

  bool operator==(const FiniteField& o) const { return q_ == o.q_; }

 private:
  explicit FiniteField(std::uint32_t q);

  std::uint32_t q_ = 0;
  std::uint32_t p_ = 0;
  unsigned e_ = 1;
  // Extension fields only.
  std::vector<std::uint16_t> log_;
  std::vector<std::uint16_t> exp_;
  std::vector<std::uint16_t> add_;
};

// Element bundled with its field, for the generic linear algebra. A
// default-constructed value is zero in whatever field it meets.
struct FqElement {
  const FiniteField* F = nullptr;
  FiniteField::Elem v = 0;

  const FiniteField& fld(const FqElement& o) const { return F ? *F : *o.F; }
  friend FqElement operator+(const FqElement& a, const FqElement& b) { return {&a.fld(b), a.fld(b).add(a.v, b.v)}; }
  friend FqElement operator-(const FqElement& a, const FqElement& b) { return {&a.fld(b), a.fld(b).sub(a.v, b.v)}; }
  friend FqElement operator*(const FqElement& a, const FqElement& b) { return {&a.fld(b), a.fld(b).mul(a.v, b.v)}; }
  friend FqElement operator/(const FqElement& a, const FqElement& b) { return {&a.fld(b), a.fld(b).div(a.v, b.v)}; }
  FqElement operator-() const { return F ? FqElement{F, F->neg(v)} : *this; }
  FqElement& operator+=(const FqElement& o) { return *this = *this + o; }
  FqElement& operator-=(const FqElement& o) { return *this = *this - o; }
  FqElement& operator*=(const FqElement& o) { return *this = *this * o; }
  friend bool operator==(const FqElement& a, const FqElement& b) { return a.v == b.v; }
};

struct FqField {
  using Element = FqElement;
  const FiniteField* F;
  Element zero() const { return {F, 0}; }
  Element one() const { return {F, 1}; }
  Element of(FiniteField::Elem v) const { return {F, v}; }
  static bool is_zero(const Element& x) { return x.v == 0; }
};

}  // namespace latred
