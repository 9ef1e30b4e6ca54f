#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "latred/error.hpp"
#include "latred/euclidean.hpp"
#include "latred/finite_field.hpp"
#include "latred/linalg.hpp"
#include "latred/matrix.hpp"
#include "latred/numbers.hpp"
#include "latred/poly.hpp"
#include "latred/rational_function.hpp"
#include "latred/ring.hpp"
#include "latred/valuation.hpp"

namespace latred {

using Index = std::vector<std::size_t>;  // 1-based

template <class T>
struct Minor {
  Index index;  // column subset when m = rows, else row subset followed by column subset
  T value;
};

namespace detail {

inline void subsets(std::size_t n, std::size_t m, std::vector<Index>& out) {
  Index cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == m) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (m - cur.size()) <= n; ++i) {
      cur.push_back(i + 1);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace detail

// All m x m minors over a field, keyed and ordered lexicographically.
template <class Field>
std::vector<Minor<typename Field::Element>> minors(const Field& K, const Matrix<typename Field::Element>& M,
                                                   std::size_t m) {
  if (m == 0 || m > M.rows() || m > M.cols()) fail(ErrorKind::dimension, "minor size out of range");
  std::vector<Index> rs, cs;
  detail::subsets(M.rows(), m, rs);
  detail::subsets(M.cols(), m, cs);
  std::vector<Minor<typename Field::Element>> out;
  for (const auto& r : rs)
    for (const auto& c : cs) {
      Matrix<typename Field::Element> sub(m, m, K.zero());
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) sub(i, j) = M(r[i] - 1, c[j] - 1);
      Index key;
      if (M.rows() != m) key = r;
      key.insert(key.end(), c.begin(), c.end());
      out.push_back({std::move(key), determinant(K, std::move(sub))});
    }
  return out;
}

}  // namespace latred
