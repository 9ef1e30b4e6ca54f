#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "latred/error.hpp"
#include "latred/log_value.hpp"
#include "latred/numbers.hpp"

namespace latred::filtration {

// Value types: Rational (function-field and abstract plots) or LogValue
// (integral lattices). Only +, -, integer scaling and comparison are used.

template <class V>
struct GradedPoint {
  int rank;
  V logvol;
};

template <class V>
struct Plot {
  std::vector<GradedPoint<V>> minima;  // lowest point of each present rank
  std::vector<GradedPoint<V>> path;    // vertices of the canonical path
};

template <class H, class V>
struct FiltrationReport {
  std::vector<GradedPoint<V>> minima;  // ranks 0..n
  std::vector<GradedPoint<V>> path;
  std::vector<H> chain;                // 0 = V_0 < V_1 < ... < V_k = top
  std::vector<V> c_values;             // c of chain[1..k-1]
};

// Next search bound: unit steps while small, doubling once large.
inline Rational widen(const Rational& b) { return b + (abs(b) > 1 ? Rational(abs(b)) : Rational(1)); }
inline LogValue widen(const LogValue& b) {
  LogValue step = LogValue::log_of(2);
  return b + (abs(b) > step ? abs(b) : step);
}

template <class V>
V slope(const GradedPoint<V>& hi, const GradedPoint<V>& lo) {
  return V((hi.logvol - lo.logvol) / static_cast<long>(hi.rank - lo.rank));
}

// Lower convex hull with closed omission: a point on a segment between two
// other points is dropped.
template <class V>
Plot<V> canonical_plot(const std::vector<GradedPoint<V>>& points, int top_rank) {
  std::map<int, V> lowest;
  for (const auto& p : points) {
    if (p.rank < 0 || p.rank > top_rank) fail(ErrorKind::range, "point rank out of range");
    auto it = lowest.find(p.rank);
    if (it == lowest.end() || p.logvol < it->second) lowest[p.rank] = p.logvol;
  }
  if (!lowest.count(0) || !lowest.count(top_rank))
    fail(ErrorKind::incomplete_plot, "plot needs points of rank 0 and the top rank");
  if (lowest[0] != V()) fail(ErrorKind::incomplete_plot, "rank-0 point must be (0, 0)");

  Plot<V> out;
  for (const auto& [r, v] : lowest) out.minima.push_back({r, v});
  std::vector<GradedPoint<V>>& h = out.path;
  for (const auto& p : out.minima) {
    while (h.size() >= 2) {
      const auto& a = h[h.size() - 2];
      const auto& b = h[h.size() - 1];
      // b is on or above the segment a -> p
      V lhs((b.logvol - a.logvol) * static_cast<long>(p.rank - b.rank));
      V rhs((p.logvol - b.logvol) * static_cast<long>(b.rank - a.rank));
      if (lhs >= rhs) h.pop_back();
      else break;
    }
    h.push_back(p);
  }
  return out;
}

// Exact min over k < m < l of slope(l, m) - slope(m, k) on a full list of
// per-rank minima; equals the slope jump at a path vertex.
template <class V>
V c_from_minima(const std::vector<GradedPoint<V>>& minima, int m) {
  std::optional<V> best_out, best_in;
  for (const auto& p : minima) {
    if (p.rank > m) {
      V s = slope(p, minima[static_cast<std::size_t>(m)]);
      if (!best_out || s < *best_out) best_out = s;
    } else if (p.rank < m) {
      V s = slope(minima[static_cast<std::size_t>(m)], p);
      if (!best_in || s > *best_in) best_in = s;
    }
  }
  return V(*best_out - *best_in);
}

template <class O>
concept LatticeOracle = requires(const O& o, const typename O::Handle& h, const typename O::Value& b, int m) {
  { o.top_rank() } -> std::convertible_to<int>;
  { o.zero() } -> std::same_as<typename O::Handle>;
  { o.top() } -> std::same_as<typename O::Handle>;
  { o.rank(h) } -> std::convertible_to<int>;
  { o.logvol(h) } -> std::convertible_to<typename O::Value>;
  { o.summands(m, b) } -> std::same_as<std::vector<typename O::Handle>>;
  { o.leq(h, h) } -> std::convertible_to<bool>;
  { o.meet(h, h) } -> std::same_as<typename O::Handle>;
  { o.join(h, h) } -> std::same_as<typename O::Handle>;
};

// Oracles may supply a lower bound for the logvol of rank-m summands to
// start the search from.
template <class O>
typename O::Value start_bound(const O& o, int m, const typename O::Value& fallback) {
  if constexpr (requires { o.start_bound(m); }) return o.start_bound(m);
  else return fallback;
}

// Per-rank minima and all summands attaining them.
template <LatticeOracle O>
std::vector<std::pair<typename O::Value, std::vector<typename O::Handle>>> rank_minimizers(const O& oracle) {
  using V = typename O::Value;
  using H = typename O::Handle;
  const int n = oracle.top_rank();
  V top = oracle.logvol(oracle.top());
  V bound = top > V() ? top : V();
  std::vector<std::pair<V, std::vector<H>>> out;
  out.push_back({V(), {oracle.zero()}});
  for (int m = 1; m < n; ++m) {
    V b = start_bound(oracle, m, bound);
    std::vector<H> found = oracle.summands(m, b);
    while (found.empty()) {
      b = widen(b);
      found = oracle.summands(m, b);
    }
    V best = oracle.logvol(found.front());
    for (const auto& h : found) {
      V v = oracle.logvol(h);
      if (v < best) best = v;
    }
    std::vector<H> arg;
    for (const auto& h : found)
      if (oracle.logvol(h) == best) arg.push_back(h);
    out.push_back({best, std::move(arg)});
  }
  if (n > 0) out.push_back({top, {oracle.top()}});
  return out;
}

template <LatticeOracle O>
FiltrationReport<typename O::Handle, typename O::Value> canonical_filtration(const O& oracle) {
  using V = typename O::Value;
  const int n = oracle.top_rank();
  auto mins = rank_minimizers(oracle);
  std::vector<GradedPoint<V>> points;
  for (int m = 0; m <= n; ++m) points.push_back({m, mins[static_cast<std::size_t>(m)].first});
  Plot<V> plot = canonical_plot(points, n);

  FiltrationReport<typename O::Handle, V> rep;
  rep.minima = plot.minima;
  rep.path = plot.path;
  for (const auto& v : plot.path) {
    const auto& arg = mins[static_cast<std::size_t>(v.rank)].second;
    if (arg.size() != 1)
      fail(ErrorKind::violated_uniqueness, "rank " + std::to_string(v.rank) + " minimum is not unique");
    if (!rep.chain.empty() && !oracle.leq(rep.chain.back(), arg.front()))
      fail(ErrorKind::violated_uniqueness, "path vertices do not form a chain");
    rep.chain.push_back(arg.front());
    if (v.rank != 0 && v.rank != n) rep.c_values.push_back(c_from_minima(rep.minima, v.rank));
  }
  return rep;
}

// Exact c_W: inf over saturated W0 < W < W2 of slope(W2, W) - slope(W, W0).
// Per rank the minimum over comparable summands is found by widening the
// bound until one exists; everything below that bound is then enumerated.
template <LatticeOracle O>
typename O::Value c_value(const O& oracle, const typename O::Handle& w) {
  using V = typename O::Value;
  const int n = oracle.top_rank();
  const int m = oracle.rank(w);
  if (m <= 0 || m >= n) fail(ErrorKind::boundary_module, "c_W is defined only for 0 < W < V");
  const V lw = oracle.logvol(w);
  const V top = oracle.logvol(oracle.top());
  V start = lw;
  if (top > start) start = top;
  if (V() > start) start = V();

  auto best_over = [&](int k, bool below) {
    V b = start_bound(oracle, k, start);
    while (true) {
      std::optional<V> best;
      for (const auto& h : oracle.summands(k, b)) {
        bool comparable = below ? oracle.leq(h, w) : oracle.leq(w, h);
        if (!comparable) continue;
        V v = oracle.logvol(h);
        if (!best || v < *best) best = v;
      }
      if (best) return *best;
      b = widen(b);
    }
  };

  std::optional<V> out_slope, in_slope;
  for (int l = m + 1; l <= n; ++l) {
    V v = l == n ? top : best_over(l, false);
    V s((v - lw) / static_cast<long>(l - m));
    if (!out_slope || s < *out_slope) out_slope = s;
  }
  for (int k = 0; k < m; ++k) {
    V v = k == 0 ? V() : best_over(k, true);
    V s((lw - v) / static_cast<long>(m - k));
    if (!in_slope || s > *in_slope) in_slope = s;
  }
  return V(*out_slope - *in_slope);
}

}  // namespace latred::filtration
