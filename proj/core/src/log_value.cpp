#include "latred/log_value.hpp"

#include <mpfr.h>

#include <cmath>
#include <numeric>

#include "latred/error.hpp"

namespace latred {

namespace {

bool perfect_root(const Integer& z, unsigned long d, Integer& root) {
  return mpz_root(root.get_mpz_t(), z.get_mpz_t(), d) != 0;
}

// Pull perfect powers out of x so that k stays small.
void reduce(Rational& x, long& k) {
  for (long d = 2; d <= k; ++d) {
    while (k % d == 0) {
      Integer rn, rd;
      if (!perfect_root(x.get_num(), static_cast<unsigned long>(d), rn) ||
          !perfect_root(x.get_den(), static_cast<unsigned long>(d), rd))
        break;
      x = Rational(rn, rd);
      k /= d;
    }
  }
}

double ln_integer(const Integer& z) {
  long e = 0;
  double m = mpz_get_d_2exp(&e, z.get_mpz_t());
  return std::log(m) + static_cast<double>(e) * std::log(2.0);
}

}  // namespace

LogValue LogValue::log_of(const Rational& x, long k) {
  if (x <= 0) fail(ErrorKind::range, "logarithm of a non-positive number");
  if (k < 1) fail(ErrorKind::range, "log root must be positive");
  Rational y = x;
  reduce(y, k);
  return LogValue(y, k);
}

double LogValue::to_double() const {
  return (ln_integer(x_.get_num()) - ln_integer(x_.get_den())) / static_cast<double>(k_);
}

LogValue operator+(const LogValue& a, const LogValue& b) {
  long l = std::lcm(a.k_, b.k_);
  Rational x = ipow(a.x_, l / a.k_) * ipow(b.x_, l / b.k_);
  return LogValue::log_of(x, l);
}

LogValue LogValue::operator-() const { return LogValue(Rational(1) / x_, k_); }

LogValue operator-(const LogValue& a, const LogValue& b) { return a + (-b); }

LogValue operator*(const LogValue& a, long m) {
  if (m == 0) return LogValue();
  if (m < 0) return -(a * -m);
  long g = std::gcd(m, a.k_);
  return LogValue::log_of(ipow(a.x_, m / g), a.k_ / g);
}

LogValue operator/(const LogValue& a, long m) {
  if (m == 0) fail(ErrorKind::zero_argument, "division of a log value by zero");
  if (m < 0) return -(a / -m);
  return LogValue::log_of(a.x_, a.k_ * m);
}

LogValue abs(const LogValue& v) { return v.sign() < 0 ? -v : v; }

bool LogValue::exceeds(const Rational& theta) const {
  if (theta == 0) return sign() > 0;
  Rational target = theta * k_;
  for (mpfr_prec_t prec = 128; prec <= (1 << 18); prec *= 2) {
    mpfr_t lo, hi, a, b, tlo, thi;
    mpfr_inits2(prec, lo, hi, a, b, tlo, thi, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_z(a, x_.get_num_mpz_t(), MPFR_RNDD);
    mpfr_log(a, a, MPFR_RNDD);
    mpfr_set_z(b, x_.get_den_mpz_t(), MPFR_RNDU);
    mpfr_log(b, b, MPFR_RNDU);
    mpfr_sub(lo, a, b, MPFR_RNDD);
    mpfr_set_z(a, x_.get_num_mpz_t(), MPFR_RNDU);
    mpfr_log(a, a, MPFR_RNDU);
    mpfr_set_z(b, x_.get_den_mpz_t(), MPFR_RNDD);
    mpfr_log(b, b, MPFR_RNDD);
    mpfr_sub(hi, a, b, MPFR_RNDU);
    mpfr_set_q(tlo, target.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(thi, target.get_mpq_t(), MPFR_RNDU);
    int decided = 0;
    if (mpfr_cmp(lo, thi) > 0) decided = 1;
    else if (mpfr_cmp(hi, tlo) < 0) decided = -1;
    mpfr_clears(lo, hi, a, b, tlo, thi, static_cast<mpfr_ptr>(nullptr));
    if (decided) return decided > 0;
  }
  fail(ErrorKind::range, "threshold comparison did not separate");
}

std::string LogValue::str() const {
  std::string s = "ln(" + to_string(x_) + ")";
  if (k_ != 1) s += "/" + std::to_string(k_);
  return s;
}

}  // namespace latred
