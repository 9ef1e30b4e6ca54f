#include "latred/numbers.hpp"

#include "latred/error.hpp"

namespace latred {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  auto bad = [&]() { fail(ErrorKind::parse, "malformed rational '" + s + "'"); };
  auto slash = s.find('/');
  auto digits_ok = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false)) bad();
  if (num[0] == '+') num = num.substr(1);
  Integer d(den);
  if (d == 0) fail(ErrorKind::zero_argument, "zero denominator in '" + s + "'");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational ipow(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) fail(ErrorKind::zero_argument, "negative power of zero");
    return ipow(Rational(1) / base, -e);
  }
  Rational r(ipow(base.get_num(), static_cast<unsigned long>(e)), ipow(base.get_den(), static_cast<unsigned long>(e)));
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor_of(const Rational& x) { return floor_div(x.get_num(), x.get_den()); }

Integer ceil_of(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

bool is_prime(const Integer& p) { return p > 1 && mpz_probab_prime_p(p.get_mpz_t(), 40) > 0; }

}  // namespace latred
