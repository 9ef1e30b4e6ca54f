#include "latred/poly.hpp"

#include <algorithm>

#include "latred/error.hpp"

namespace latred {

FqPoly::FqPoly(const FiniteField& F, std::vector<Elem> coeffs) : F_(&F), c_(std::move(coeffs)) {
  for (auto c : c_)
    if (c >= F.order()) fail(ErrorKind::range, "coefficient outside the field");
  trim();
}

FqPoly FqPoly::constant(const FiniteField& F, Elem c) { return FqPoly(F, {c}); }

FqPoly FqPoly::monomial(const FiniteField& F, Elem c, int deg) {
  std::vector<Elem> v(static_cast<std::size_t>(deg) + 1, 0);
  v[static_cast<std::size_t>(deg)] = c;
  return FqPoly(F, std::move(v));
}

void FqPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const FiniteField& FqPoly::fld(const FqPoly& other) const {
  if (F_) {
    if (other.F_ && other.F_ != F_) fail(ErrorKind::unsupported_ring, "mixed finite fields");
    return *F_;
  }
  if (other.F_) return *other.F_;
  fail(ErrorKind::unsupported_ring, "polynomial without a field");
}

FqPoly::Elem FqPoly::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : 0;
}

int FqPoly::low_degree() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i]) return static_cast<int>(i);
  return 0;
}

FqPoly FqPoly::monic() const {
  if (c_.empty()) return *this;
  return scaled(F_->inv(c_.back()));
}

FqPoly FqPoly::scaled(Elem a) const {
  if (c_.empty()) return *this;
  FqPoly r = *this;
  for (auto& c : r.c_) c = F_->mul(c, a);
  r.trim();
  return r;
}

FqPoly FqPoly::shifted(int k) const {
  if (c_.empty() || k == 0) return *this;
  FqPoly r = *this;
  r.c_.insert(r.c_.begin(), static_cast<std::size_t>(k), 0);
  return r;
}

FqPoly& FqPoly::operator+=(const FqPoly& o) {
  if (o.c_.empty()) return *this;
  const FiniteField& F = fld(o);
  F_ = &F;
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = F.add(c_[i], o.c_[i]);
  trim();
  return *this;
}

FqPoly& FqPoly::operator-=(const FqPoly& o) {
  if (o.c_.empty()) return *this;
  const FiniteField& F = fld(o);
  F_ = &F;
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = F.sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

FqPoly& FqPoly::operator*=(const FqPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    if (!F_) F_ = o.F_;
    c_.clear();
    return *this;
  }
  const FiniteField& F = fld(o);
  std::vector<Elem> r(c_.size() + o.c_.size() - 1, 0);
  if (F.degree() == 1) {
    const std::uint64_t p = F.characteristic();
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!c_[i]) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j)
        r[i + j] = static_cast<Elem>((r[i + j] + static_cast<std::uint64_t>(c_[i]) * o.c_[j]) % p);
    }
  } else {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!c_[i]) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(c_[i], o.c_[j]));
    }
  }
  c_ = std::move(r);
  F_ = &F;
  trim();
  return *this;
}

FqPoly FqPoly::operator-() const {
  FqPoly r = *this;
  for (auto& c : r.c_) c = F_->neg(c);
  return r;
}

std::strong_ordering operator<=>(const FqPoly& a, const FqPoly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
  for (std::size_t i = a.c_.size(); i-- > 0;)
    if (a.c_[i] != b.c_[i]) return a.c_[i] <=> b.c_[i];
  return std::strong_ordering::equal;
}

std::string FqPoly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    Elem c = c_[i];
    if (!c) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += i == 1 ? "t" : "t^" + std::to_string(i);
  }
  return out;
}

std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b) {
  if (b.is_zero()) fail(ErrorKind::zero_argument, "polynomial division by zero");
  const FiniteField& F = *b.field();
  if (a.degree() < b.degree()) return {FqPoly::zero(F), a.field() ? a : FqPoly::zero(F)};
  std::vector<FiniteField::Elem> r = a.coeffs();
  std::vector<FiniteField::Elem> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const FiniteField::Elem inv_lead = F.inv(bc.back());
  for (std::size_t k = r.size(); k-- > db;) {
    if (!r[k]) continue;
    FiniteField::Elem f = F.mul(r[k], inv_lead);
    q[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] = F.sub(r[k - db + j], F.mul(f, bc[j]));
  }
  return {FqPoly(F, std::move(q)), FqPoly(F, std::move(r))};
}

FqPoly exact_div(const FqPoly& a, const FqPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) fail(ErrorKind::range, "inexact polynomial division");
  return q;
}

FqPoly gcd(FqPoly a, FqPoly b) {
  while (!b.is_zero()) {
    FqPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

void xgcd(const FqPoly& a, const FqPoly& b, FqPoly& g, FqPoly& s, FqPoly& t) {
  const FiniteField& F = a.field() ? *a.field() : *b.field();
  FqPoly r0 = a, r1 = b, s0 = FqPoly::constant(F, 1), s1 = FqPoly::zero(F), t0 = FqPoly::zero(F),
         t1 = FqPoly::constant(F, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    FqPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    FqPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    g = r0;
    s = FqPoly::zero(F);
    t = FqPoly::zero(F);
    return;
  }
  FiniteField::Elem u = F.inv(r0.leading());
  g = r0.scaled(u);
  s = s0.scaled(u);
  t = t0.scaled(u);
}

FqPoly pow(const FqPoly& a, unsigned e) {
  FqPoly r = FqPoly::constant(*a.field(), 1), b = a;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

bool is_irreducible(const FqPoly& f) {
  if (f.degree() < 1) return false;
  const FiniteField& F = *f.field();
  // Rabin-style: f is irreducible iff gcd(f, t^(q^i) - t) = 1 for i <= deg/2.
  FqPoly t = FqPoly::t(F);
  FqPoly x = t;
  auto powmod = [&](FqPoly base, std::uint64_t e) {
    FqPoly r = FqPoly::constant(F, 1);
    base = divmod(base, f).second;
    while (e) {
      if (e & 1) r = divmod(r * base, f).second;
      base = divmod(base * base, f).second;
      e >>= 1;
    }
    return r;
  };
  for (int i = 1; i <= f.degree() / 2; ++i) {
    x = powmod(x, F.order());
    if (gcd(f, x - t).degree() > 0) return false;
  }
  return true;
}

}  // namespace latred
