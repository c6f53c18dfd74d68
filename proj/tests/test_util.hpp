// Copyright 2026 The cupgates Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Shared helpers for the test binaries: naive oracles and small fixtures.

#ifndef CUPGATES_TESTS_TEST_UTIL_HPP_
#define CUPGATES_TESTS_TEST_UTIL_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cupgates/bitmatrix.hpp"
#include "cupgates/complexes.hpp"
#include "cupgates/group.hpp"
#include "cupgates/json_io.hpp"

namespace cupgates::testing {

using Dense = std::vector<std::vector<int>>;

inline Dense ToDense(const BitMatrix& m) {
  Dense d(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = m.get(r, c);
  return d;
}

// Plain Gaussian elimination on int rows.
inline int NaiveRank(Dense d) {
  int rank = 0;
  const int rows = static_cast<int>(d.size());
  const int cols = rows ? static_cast<int>(d[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = rank;
    while (p < rows && !d[p][c]) ++p;
    if (p == rows) continue;
    std::swap(d[p], d[rank]);
    for (int r = 0; r < rows; ++r)
      if (r != rank && d[r][c])
        for (int k = 0; k < cols; ++k) d[r][k] ^= d[rank][k];
    ++rank;
  }
  return rank;
}

inline BitMatrix RandomMatrix(std::mt19937_64& rng, std::size_t r,
                              std::size_t c, double p = 0.5) {
  std::bernoulli_distribution bit(p);
  BitMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, bit(rng));
  return m;
}

inline CssCode MakeCode(const std::vector<int>& orders,
                        const std::vector<std::string>& polys,
                        ProductKind kind = ProductKind::kBalanced) {
  auto g = FiniteGroup::Abelian(orders);
  std::vector<TwoTermComplex> f;
  for (const auto& p : polys)
    f.push_back(TwoTermComplex::FromCoboundary(ParsePolynomial(g, p)));
  return CssCode(std::move(f), kind);
}

// Minimum weight of a vector in ker(a) outside rowspace(b), by enumeration
// in increasing weight. Returns -1 when none has weight <= w_max.
inline int BruteSideDistance(const BitMatrix& a, const BitMatrix& b,
                             int w_max) {
  const std::size_t n = a.cols();
  const RowSpace rs(b);
  std::vector<std::size_t> idx;
  for (int w = 1; w <= w_max; ++w) {
    idx.resize(w);
    for (int i = 0; i < w; ++i) idx[i] = i;
    if (static_cast<std::size_t>(w) > n) break;
    while (true) {
      BitVector v(n);
      for (auto i : idx) v.set(i, true);
      if (a.apply(v).is_zero() && !rs.contains(v)) return w;
      int i = w - 1;
      while (i >= 0 && idx[i] == n - w + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return -1;
}

}  // namespace cupgates::testing

#endif  // CUPGATES_TESTS_TEST_UTIL_HPP_
