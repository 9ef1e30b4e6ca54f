#pragma once

#include <compare>
#include <string>

#include "latred/numbers.hpp"

namespace latred {

// Exact real of the form ln(x)/k with x > 0 rational and k >= 1. Closed under
// +, -, and multiplication/division by integers; comparisons are exact.
class LogValue {
 public:
  LogValue() : x_(1), k_(1) {}
  static LogValue log_of(const Rational& x, long k = 1);

  const Rational& base() const { return x_; }
  long root() const { return k_; }
  bool is_zero() const { return x_ == 1; }
  int sign() const { return x_ > 1 ? 1 : (x_ < 1 ? -1 : 0); }
  double to_double() const;

  friend LogValue operator+(const LogValue& a, const LogValue& b);
  friend LogValue operator-(const LogValue& a, const LogValue& b);
  LogValue operator-() const;
  friend LogValue operator*(const LogValue& a, long m);
  friend LogValue operator/(const LogValue& a, long m);
  LogValue& operator+=(const LogValue& o) { return *this = *this + o; }
  LogValue& operator-=(const LogValue& o) { return *this = *this - o; }

  friend bool operator==(const LogValue& a, const LogValue& b) { return (a - b).is_zero(); }
  friend std::strong_ordering operator<=>(const LogValue& a, const LogValue& b) {
    int s = (a - b).sign();
    return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // Decides ln(x)/k > theta for rational theta (MPFR with growing precision).
  bool exceeds(const Rational& theta) const;

  std::string str() const;

 private:
  LogValue(Rational x, long k) : x_(std::move(x)), k_(k) {}
  Rational x_;
  long k_;
};

LogValue abs(const LogValue& v);

}  // namespace latred
