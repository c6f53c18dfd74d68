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

#include <random>

#include "doctest.h"
#include "cupgates/complexes.hpp"
#include "cupgates/error.hpp"
#include "cupgates/search.hpp"
#include "test_util.hpp"

using namespace cupgates;
using cupgates::testing::BruteSideDistance;
using cupgates::testing::MakeCode;

namespace {

GroupAlgebraElement RandomElement(std::mt19937_64& rng, const GroupPtr& g,
                                  int w) {
  std::vector<Element> s;
  while (static_cast<int>(s.size()) < w) {
    const Element e = rng() % g->size();
    if (std::find(s.begin(), s.end(), e) == s.end()) s.push_back(e);
  }
  return GroupAlgebraElement(g, s);
}

CssCode RandomCode(std::mt19937_64& rng, const std::vector<int>& orders,
                   int factors, int w, ProductKind kind) {
  auto g = FiniteGroup::Abelian(orders);
  std::vector<TwoTermComplex> f;
  for (int i = 0; i < factors; ++i)
    f.push_back(TwoTermComplex::FromCoboundary(RandomElement(rng, g, w)));
  return CssCode(std::move(f), kind);
}

}  // namespace

TEST_CASE("product codes are CSS with the rank formula for k") {
  std::mt19937_64 rng(21);
  struct Case {
    std::vector<int> orders;
    int factors, w;
    ProductKind kind;
  };
  const std::vector<Case> cases = {
      {{6}, 2, 3, ProductKind::kBalanced},   {{9}, 3, 4, ProductKind::kBalanced},
      {{3, 3}, 3, 3, ProductKind::kBalanced}, {{4, 2}, 2, 4, ProductKind::kBalanced},
      {{4}, 2, 2, ProductKind::kHypergraph}, {{3}, 3, 2, ProductKind::kHypergraph},
      {{5}, 2, 3, ProductKind::kHypergraph}};
  for (const auto& c : cases) {
    for (int t = 0; t < 10; ++t) {
      const CssCode code = RandomCode(rng, c.orders, c.factors, c.w, c.kind);
      CAPTURE(code.group().description());
      const std::size_t cells =
          c.kind == ProductKind::kBalanced ? code.group().size()
                                           : code.sector_size();
      CHECK(code.n() == static_cast<std::size_t>(c.factors) * cells);
      CHECK(code.hx().cols() == code.n());
      CHECK(code.hz().cols() == code.n());
      CHECK((code.hx() * code.hz().transpose()).is_zero());
      CHECK(code.k() == code.n() - Rank(code.hx()) - Rank(code.hz()));
      const BitMatrix lx = CohomologyBasis(code);
      const BitMatrix lz = HomologyBasis(code);
      CHECK(lx.rows() == code.k());
      CHECK(lz.rows() == code.k());
      if (code.k() == 0) continue;
      CHECK((code.hz() * lx.transpose()).is_zero());
      CHECK((code.hx() * lz.transpose()).is_zero());
      CHECK(Rank(code.hx().vstack(lx)) == Rank(code.hx()) + code.k());
      // The pairing between the two bases is nondegenerate.
      CHECK(Rank(lx * lz.transpose()) == code.k());
    }
  }
}

TEST_CASE("known parameters") {
  struct Row {
    std::vector<int> orders;
    std::vector<std::string> polys;
    std::size_t n, k;
  };
  const std::vector<Row> rows = {
      {{2}, {"1+x", "1+x", "1+x"}, 6, 3},
      {{7}, {"1+x", "1+x", "1+x"}, 21, 3},
      {{9}, {"1+x+x^3+x^4", "1+x+x^6+x^7", "1+x^2+x^3+x^5"}, 27, 9},
      {{7}, {"1+x+x^2+x^3", "1+x+x^3+x^4", "1+x^2+x^3+x^5"}, 21, 3},
  };
  for (const auto& r : rows) {
    const CssCode c = MakeCode(r.orders, r.polys);
    CHECK(c.n() == r.n);
    CHECK(c.k() == r.k);
    CHECK(c.shape() == "cube");
  }
  CHECK(MakeCode({2}, {"1+x", "1+x"}).shape() == "square");
}

TEST_CASE("factor count and group mismatches are rejected") {
  auto g = FiniteGroup::Abelian({4});
  auto h = FiniteGroup::Abelian({5});
  auto a = TwoTermComplex::FromCoboundary(ParsePolynomial(g, "1+x"));
  auto b = TwoTermComplex::FromCoboundary(ParsePolynomial(h, "1+x"));
  CHECK_THROWS_AS(CssCode({a}, ProductKind::kBalanced), Error);
  CHECK_THROWS_AS(CssCode({a, b}, ProductKind::kBalanced), Error);
  CHECK_THROWS_AS(CssCode({a, a, a, a}, ProductKind::kBalanced), Error);
}

TEST_CASE("exact distance agrees with brute force") {
  std::mt19937_64 rng(22);
  int checked = 0;
  for (int t = 0; t < 40; ++t) {
    const bool cube = t % 2;
    const CssCode code =
        cube ? RandomCode(rng, {3 + static_cast<int>(rng() % 3)}, 3, 2,
                          ProductKind::kBalanced)
             : RandomCode(rng, {4 + static_cast<int>(rng() % 4)}, 2, 3,
                          ProductKind::kBalanced);
    if (code.k() == 0) continue;
    ExactDistanceOptions o;
    o.w_max = 4;
    for (bool sym : {true, false}) {
      o.use_symmetry = sym;
      const auto dx = ExactSideDistance(code, Side::kX, o);
      const auto dz = ExactSideDistance(code, Side::kZ, o);
      const int bx = BruteSideDistance(code.hz(), code.hx(), 4);
      const int bz = BruteSideDistance(code.hx(), code.hz(), 4);
      CHECK(dx.value_or(-1) == bx);
      CHECK(dz.value_or(-1) == bz);
    }
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("randomized distance is an upper bound and seed-deterministic") {
  const CssCode code = MakeCode({9}, {"1+x+x^3+x^4", "1+x+x^3+x^7", "1+x+x^4+x^6"});
  const auto exact = DistanceExactByWeight(code, {});
  REQUIRE(exact.has_value());
  CHECK(*exact == 3);
  const auto a = DistanceUpperRandomized(code, 500, 5);
  const auto b = DistanceUpperRandomized(code, 500, 5);
  CHECK(a.dx == b.dx);
  CHECK(a.dz == b.dz);
  CHECK(a.d() >= *exact);
}

TEST_CASE("measured distance reports exactness") {
  const CssCode code = MakeCode({7}, {"1+x", "1+x^2", "1+x^3"});
  DistancePolicy p;
  p.w_max = 3;
  p.trials = 200;
  const DistanceReport r = MeasureDistance(code, p);
  CHECK(r.defined);
  CHECK(r.d() == 3);
  CHECK(r.exact());
  // With a zero ceiling only the randomized bound is available.
  p.ceiling = 0;
  const DistanceReport u = MeasureDistance(code, p);
  CHECK(u.method == "randomized");
  CHECK(u.d() >= 3);
  CHECK(u.lower() == 1);
  // 1+x+x^2 is a unit over C5.
  const CssCode trivial = MakeCode({5}, {"1+x+x^2", "1+x+x^2"});
  CHECK(trivial.k() == 0);
  CHECK_FALSE(MeasureDistance(trivial, p).defined);
}

TEST_CASE("low-weight scan respects the candidate ceiling") {
  const CssCode code = MakeCode({13}, {"1+x+x^2+x^3", "1+x+x^3+x^4", "1+x^2+x^5+x^7"});
  ExactDistanceOptions o;
  o.w_max = 6;
  o.ceiling = CandidateCount(code, 3, true);
  const WeightScan s = ScanLowWeight(code, Side::kX, o);
  CHECK_FALSE(s.found.has_value());
  CHECK(s.excluded_through == 3);
  CHECK(CandidateCount(code, 4, true) > o.ceiling);
}

TEST_CASE("translating a factor preserves n, k and d") {
  auto g = FiniteGroup::Abelian({8});
  const auto p = ParsePolynomial(g, "1+x+x^2+x^5");
  const auto q = ParsePolynomial(g, "1+x^3+x^4+x^5");
  const auto base = CssCode({TwoTermComplex::FromCoboundary(p),
                             TwoTermComplex::FromCoboundary(q)},
                            ProductKind::kBalanced);
  const auto d0 = DistanceExactByWeight(base, {});
  for (Element s = 1; s < 8; ++s) {
    const auto code = CssCode({TwoTermComplex::FromCoboundary(p.right_multiply(s)),
                               TwoTermComplex::FromCoboundary(q)},
                              ProductKind::kBalanced);
    CHECK(code.k() == base.k());
    CHECK(DistanceExactByWeight(code, {}) == d0);
  }
}
