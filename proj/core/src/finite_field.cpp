#include "latred/finite_field.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "latred/error.hpp"

namespace latred {

namespace {

bool small_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// q = p^e with p prime, or false.
bool prime_power(std::uint64_t q, std::uint32_t& p, unsigned& e) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d <= q; ++d) {
    if (q % d != 0) continue;
    if (!small_prime(d)) return false;
    unsigned k = 0;
    std::uint64_t r = q;
    while (r % d == 0) {
      r /= d;
      ++k;
    }
    if (r != 1) return false;
    p = static_cast<std::uint32_t>(d);
    e = k;
    return true;
  }
  return false;
}

using Digits = std::vector<std::uint32_t>;

Digits poly_mulmod(const Digits& a, const Digits& b, const Digits& modulus, std::uint32_t p) {
  const std::size_t e = modulus.size() - 1;
  Digits prod(2 * e, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t k = prod.size(); k-- > e;) {
    std::uint32_t c = prod[k];
    if (c == 0) continue;
    // modulus is monic
    for (std::size_t j = 0; j <= e; ++j) prod[k - e + j] = (prod[k - e + j] + (p - c) * modulus[j]) % p;
  }
  prod.resize(e);
  return prod;
}

bool poly_irreducible(const Digits& f, std::uint32_t p) {
  const unsigned e = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= e / 2; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Digits g(d + 1, 0);
      std::uint64_t c = code;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      Digits r = f;
      for (std::size_t k = r.size(); k-- > d;) {
        std::uint32_t lead = r[k];
        if (lead == 0) continue;
        for (std::size_t j = 0; j <= d; ++j) r[k - d + j] = (r[k - d + j] + (p - lead) * g[j]) % p;
      }
      bool zero = true;
      for (unsigned i = 0; i < d; ++i) zero = zero && r[i] == 0;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

bool FiniteField::supported(std::uint64_t q) {
  std::uint32_t p = 0;
  unsigned e = 0;
  if (!prime_power(q, p, e)) return false;
  return e == 1 ? q <= 65536 : q <= 256;
}

const FiniteField& FiniteField::get(std::uint32_t q) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::unique_ptr<FiniteField>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(q);
  if (it != registry.end()) return *it->second;
  if (!supported(q)) fail(ErrorKind::unsupported_ring, "unsupported field size " + std::to_string(q));
  auto [pos, ok] = registry.emplace(q, std::unique_ptr<FiniteField>(new FiniteField(q)));
  return *pos->second;
}

FiniteField::FiniteField(std::uint32_t q) : q_(q) {
  prime_power(q, p_, e_);
  if (e_ == 1) return;

  Digits modulus;
  const std::uint32_t count = q_;  // p^e candidates for the lower coefficients
  for (std::uint32_t code = 0; code < count; ++code) {
    Digits f(e_ + 1, 0);
    std::uint32_t c = code;
    for (unsigned i = 0; i < e_; ++i) {
      f[i] = c % p_;
      c /= p_;
    }
    f[e_] = 1;
    if (f[0] != 0 && poly_irreducible(f, p_)) {
      modulus = f;
      break;
    }
  }

  auto to_digits = [&](std::uint32_t a) {
    Digits d(e_, 0);
    for (unsigned i = 0; i < e_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  };
  auto from_digits = [&](const Digits& d) {
    std::uint32_t a = 0;
    for (unsigned i = e_; i-- > 0;) a = a * p_ + d[i];
    return a;
  };

  add_.assign(static_cast<std::size_t>(q_) * q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    Digits da = to_digits(a);
    for (std::uint32_t b = 0; b < q_; ++b) {
      Digits db = to_digits(b);
      Digits s(e_);
      for (unsigned i = 0; i < e_; ++i) s[i] = (da[i] + db[i]) % p_;
      add_[a * q_ + b] = static_cast<std::uint16_t>(from_digits(s));
    }
  }

  // Smallest generator of the multiplicative group.
  for (std::uint32_t g = 2; g < q_; ++g) {
    Digits dg = to_digits(g);
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    Digits cur = to_digits(1);
    bool primitive = true;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
      std::uint32_t code = from_digits(cur);
      if (i > 0 && code == 1) {
        primitive = false;
        break;
      }
      exp_[i] = static_cast<std::uint16_t>(code);
      log_[code] = static_cast<std::uint16_t>(i);
      cur = poly_mulmod(cur, dg, modulus, p_);
    }
    if (primitive) return;
  }
  fail(ErrorKind::unsupported_ring, "no primitive element found");
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  if (e_ == 1) {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  return add_[a * q_ + b];
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  if (e_ == 1) return a == 0 ? 0 : p_ - a;
  std::uint32_t out = 0, scale = 1;
  while (a > 0) {
    std::uint32_t d = a % p_;
    out += ((p_ - d) % p_) * scale;
    scale *= p_;
    a /= p_;
  }
  return out;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (e_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) fail(ErrorKind::zero_argument, "inverse of zero in F_q");
  if (e_ == 1) {
    // Fermat
    std::uint64_t r = 1, b = a, k = p_ - 2;
    while (k) {
      if (k & 1) r = r * b % p_;
      b = b * b % p_;
      k >>= 1;
    }
    return static_cast<Elem>(r);
  }
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::from_integer(long long k) const {
  long long r = k % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

}  // namespace latred
