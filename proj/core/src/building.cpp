#include "latred/building.hpp"

#include <algorithm>
#include <bitset>
#include <cmath>
#include <functional>

namespace latred::building {

std::vector<std::vector<std::vector<FiniteField::Elem>>> subspaces(const FiniteField& F, int n, int k) {
  using Rows = std::vector<std::vector<FiniteField::Elem>>;
  std::vector<Rows> out;
  const std::size_t nn = static_cast<std::size_t>(n), kk = static_cast<std::size_t>(k);
  std::vector<std::size_t> piv;
  auto fill = [&](Rows rows) {
    // free slots: (row, col) with col > pivot of row and col not a pivot
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < kk; ++i)
      for (std::size_t c = piv[i] + 1; c < nn; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) slots.emplace_back(i, c);
    std::vector<FiniteField::Elem> digits(slots.size(), 0);
    while (true) {
      for (std::size_t s = 0; s < slots.size(); ++s) rows[slots[s].first][slots[s].second] = digits[s];
      out.push_back(rows);
      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == F.order()) digits[pos++] = 0;
      if (pos == digits.size()) break;
    }
  };
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (piv.size() == kk) {
      Rows rows(kk, std::vector<FiniteField::Elem>(nn, 0));
      for (std::size_t i = 0; i < kk; ++i) rows[i][piv[i]] = 1;
      fill(rows);
      return;
    }
    for (std::size_t c = start; c < nn; ++c) {
      piv.push_back(c);
      rec(c + 1);
      piv.pop_back();
    }
  };
  if (k >= 0 && k <= n) rec(0);
  return out;
}

namespace {

Integer flag_count(std::uint32_t r, int m) {
  Integer out = 1;
  for (int i = 1; i <= m; ++i) out *= (ipow(Integer(r), static_cast<unsigned long>(i)) - 1) / (r - 1);
  return out;
}

using VecSet = std::bitset<128>;

VecSet span_set(const FiniteField& F, int n, const std::vector<std::vector<FiniteField::Elem>>& rows) {
  const std::uint32_t r = F.order();
  VecSet s;
  std::vector<FiniteField::Elem> coeffs(rows.size(), 0);
  while (true) {
    std::vector<FiniteField::Elem> v(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = F.add(v[j], F.mul(coeffs[i], rows[i][j]));
    std::uint32_t code = 0;
    for (std::size_t j = 0; j < v.size(); ++j) code = code * r + v[j];
    s.set(code);
    std::size_t pos = 0;
    while (pos < coeffs.size() && ++coeffs[pos] == r) coeffs[pos++] = 0;
    if (pos == coeffs.size()) break;
  }
  return s;
}

}  // namespace

Integer brute_force_flags(int n, std::uint32_t r, int k) {
  const FiniteField& F = FiniteField::get(r);
  std::vector<std::vector<VecSet>> by_dim(static_cast<std::size_t>(n + 1));
  for (int d = 0; d <= n; ++d)
    for (const auto& rows : subspaces(F, n, d)) by_dim[static_cast<std::size_t>(d)].push_back(span_set(F, n, rows));
  std::vector<std::vector<FiniteField::Elem>> fixed;
  for (int i = 0; i < k; ++i) {
    std::vector<FiniteField::Elem> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    fixed.push_back(e);
  }
  const VecSet U0 = span_set(F, n, fixed);
  Integer count = 0;
  std::function<void(int, const VecSet&)> rec = [&](int d, const VecSet& cur) {
    if (d == n) {
      ++count;
      return;
    }
    for (const auto& next : by_dim[static_cast<std::size_t>(d + 1)]) {
      if ((cur & ~next).any()) continue;
      if (d + 1 == k && next != U0) continue;
      rec(d + 1, next);
    }
  };
  rec(0, by_dim[0].front());
  return count;
}

ChamberCount count_chambers_on_edge(int n, std::uint32_t r, int k) {
  if (k < 1 || k > n - 1) fail(ErrorKind::range, "label difference must lie in 1..n-1");
  if (r < 2) fail(ErrorKind::range, "residue field size must be at least 2");
  ChamberCount c{flag_count(r, k) * flag_count(r, n - k), std::nullopt};
  if (n <= 4 && r <= 3) c.brute_force = brute_force_flags(n, r, k);
  return c;
}

std::vector<Rational> apartment_coords(const std::vector<Integer>& m) {
  if (m.empty()) return {};
  Rational mean = 0;
  for (const auto& x : m) mean += x;
  mean /= static_cast<long>(m.size());
  std::vector<Rational> out;
  for (const auto& x : m) out.push_back(Rational(x) - mean);
  return out;
}

SimplexDecomposition triangulate_point(const std::vector<Rational>& x) {
  std::vector<Integer> base;
  std::vector<Rational> frac;
  for (const auto& xi : x) {
    base.push_back(floor_of(xi));
    frac.push_back(xi - base.back());
  }
  // distinct positive fractional parts, descending
  std::vector<Rational> levels;
  for (const auto& f : frac)
    if (f > 0) levels.push_back(f);
  std::sort(levels.begin(), levels.end(), std::greater<>());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  SimplexDecomposition d;
  d.points.push_back(base);
  Rational prev = 1;
  for (const auto& a : levels) {
    std::vector<Integer> p = base;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (frac[i] >= a) p[i] += 1;
    d.mu.push_back(prev - a);
    d.points.push_back(std::move(p));
    prev = a;
  }
  d.mu.push_back(prev);
  return d;
}

std::vector<Rational> reconstruct(const SimplexDecomposition& d) {
  if (d.points.empty()) return {};
  std::vector<Rational> x(d.points.front().size(), Rational(0));
  for (std::size_t i = 0; i < d.points.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) x[j] += d.mu[i] * d.points[i][j];
  return x;
}

bool valid(const SimplexDecomposition& d) {
  if (d.points.empty() || d.points.size() != d.mu.size()) return false;
  Rational sum = 0;
  for (const auto& m : d.mu) {
    if (m <= 0 || m > 1) return false;
    sum += m;
  }
  if (sum != 1) return false;
  const std::size_t n = d.points.front().size();
  for (std::size_t i = 0; i + 1 < d.points.size(); ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < n; ++j) {
      Integer step = d.points[i + 1][j] - d.points[i][j];
      if (step != 0 && step != 1) return false;
      nonzero = nonzero || step == 1;
    }
    if (!nonzero) return false;
  }
  for (std::size_t j = 0; j < n; ++j)
    if (d.points.back()[j] > d.points.front()[j] + 1) return false;
  return true;
}

SimplexDecomposition diagonal_shift(const SimplexDecomposition& d, const Rational& lambda) {
  std::vector<std::pair<std::vector<Integer>, Rational>> terms;
  for (std::size_t i = 0; i < d.points.size(); ++i) terms.emplace_back(d.points[i], d.mu[i]);
  auto shifted = [](std::vector<Integer> p, int by) {
    for (auto& x : p) x += by;
    return p;
  };
  Rational left = lambda >= 0 ? lambda : Rational(-lambda);
  while (left > 0) {
    if (lambda > 0) {
      auto& low = terms.front();
      Rational amt = std::min(low.second, left);
      std::vector<Integer> up = shifted(low.first, 1);
      low.second -= amt;
      if (terms.back().first == up) terms.back().second += amt;
      else terms.emplace_back(up, amt);
      if (terms.front().second == 0) terms.erase(terms.begin());
      left -= amt;
    } else {
      auto& high = terms.back();
      Rational amt = std::min(high.second, left);
      std::vector<Integer> down = shifted(high.first, -1);
      high.second -= amt;
      if (terms.front().first == down) terms.front().second += amt;
      else terms.insert(terms.begin(), {down, amt});
      if (terms.back().second == 0) terms.pop_back();
      left -= amt;
    }
  }
  SimplexDecomposition out;
  for (auto& [p, m] : terms) {
    out.points.push_back(std::move(p));
    out.mu.push_back(m);
  }
  return out;
}

Rational edge_length_sq(int k, int n) {
  if (k < 1 || k > n - 1) fail(ErrorKind::range, "label difference must lie in 1..n-1");
  Rational sq(k * k, n);
  sq.canonicalize();
  return Rational(k) - sq;
}

double edge_length(int k, int n) { return std::sqrt(edge_length_sq(k, n).get_d()); }

}  // namespace latred::building
