#include "latred/rational_function.hpp"

#include <cctype>

#include "latred/error.hpp"

namespace latred {

FqRational::FqRational(const FqPoly& p) : num_(p) {
  if (p.field()) den_ = FqPoly::constant(*p.field(), 1);
}

FqRational::FqRational(const FqPoly& num, const FqPoly& den) : num_(num), den_(den) {
  if (den.is_zero()) fail(ErrorKind::zero_argument, "rational function with zero denominator");
  normalize();
}

FqRational FqRational::t_pow(const FiniteField& F, int k) {
  if (k >= 0) return FqRational(FqPoly::monomial(F, 1, k));
  return FqRational(FqPoly::constant(F, 1), FqPoly::monomial(F, 1, -k));
}

void FqRational::normalize() {
  if (num_.is_zero()) {
    const FiniteField* F = field();
    num_ = F ? FqPoly::zero(*F) : FqPoly();
    den_ = F ? FqPoly::constant(*F, 1) : FqPoly();
    return;
  }
  if (!den_.is_one()) {
    FqPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    if (!den_.is_monic()) {
      FiniteField::Elem u = den_.field()->inv(den_.leading());
      num_ = num_.scaled(u);
      den_ = den_.scaled(u);
    }
  }
}

FqRational& FqRational::operator+=(const FqRational& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

FqRational& FqRational::operator-=(const FqRational& o) { return *this += -o; }

FqRational& FqRational::operator*=(const FqRational& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = o;
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

FqRational& FqRational::operator/=(const FqRational& o) { return *this *= o.inverse(); }

FqRational FqRational::operator-() const {
  FqRational r = *this;
  r.num_ = -r.num_;
  return r;
}

FqRational FqRational::inverse() const {
  if (is_zero()) fail(ErrorKind::zero_argument, "inverse of zero rational function");
  return FqRational(den_, num_);
}

std::string FqRational::str() const {
  if (den_.is_one() || num_.is_zero()) return num_.str();
  auto wrap = [](const FqPoly& p) {
    std::string s = p.str();
    bool simple = s.find('+') == std::string::npos;
    return simple ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

namespace {

class Parser {
 public:
  Parser(const FiniteField& F, const std::string& s) : F_(F), s_(s) {}

  FqRational parse() {
    FqRational r = expr();
    skip();
    if (i_ != s_.size()) error("trailing input");
    return r;
  }

 private:
  [[noreturn]] void error(const std::string& what) {
    fail(ErrorKind::parse, "rational function '" + s_ + "': " + what);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  FqRational expr() {
    FqRational acc = FqRational::zero(F_);
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    FqRational t = term();
    acc = neg ? -t : t;
    while (true) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }
  FqRational term() {
    FqRational acc = power();
    while (true) {
      if (eat('*')) acc *= power();
      else if (eat('/')) {
        FqRational d = power();
        if (d.is_zero()) fail(ErrorKind::zero_argument, "division by zero in '" + s_ + "'");
        acc /= d;
      } else return acc;
    }
  }
  FqRational power() {
    FqRational base = atom();
    if (!eat('^')) return base;
    skip();
    bool neg = false;
    if (eat('-')) neg = true;
    skip();
    long e = number();
    if (neg) {
      if (base.is_zero()) fail(ErrorKind::zero_argument, "negative power of zero");
      base = base.inverse();
    }
    FqRational r = FqRational::one(F_);
    for (long k = 0; k < e; ++k) r *= base;
    return r;
  }
  long number() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) error("expected a number");
    if (i_ - start > 9) error("number too large");
    return std::stol(s_.substr(start, i_ - start));
  }
  FqRational atom() {
    skip();
    if (eat('(')) {
      FqRational r = expr();
      if (!eat(')')) error("expected ')'");
      return r;
    }
    if (i_ < s_.size() && s_[i_] == 't') {
      ++i_;
      return FqRational(FqPoly::t(F_));
    }
    if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      long k = number();
      FiniteField::Elem c;
      if (F_.degree() == 1) {
        c = F_.from_integer(k);
      } else {
        if (k >= static_cast<long>(F_.order())) error("field element code out of range");
        c = static_cast<FiniteField::Elem>(k);
      }
      return FqRational(FqPoly::constant(F_, c));
    }
    error("unexpected character");
  }

  const FiniteField& F_;
  const std::string& s_;
  std::size_t i_ = 0;
};

}  // namespace

FqRational parse_rational_function(const FiniteField& F, const std::string& s) { return Parser(F, s).parse(); }

}  // namespace latred
