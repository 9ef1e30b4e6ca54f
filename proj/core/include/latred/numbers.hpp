#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace latred {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& z);
// "p/q", or "p" when q = 1.
std::string to_string(const Rational& x);
Rational parse_rational(const std::string& s);

Integer ipow(const Integer& base, unsigned long e);
Rational ipow(const Rational& base, long e);

Integer floor_div(const Integer& a, const Integer& b);
Integer floor_of(const Rational& x);
Integer ceil_of(const Rational& x);

bool is_prime(const Integer& p);

inline int sign(const Integer& z) { return sgn(z); }
inline int sign(const Rational& x) { return sgn(x); }

}  // namespace latred
