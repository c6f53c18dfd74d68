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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "cupgates/matching.hpp"
#include "cupgates/orientation.hpp"

using namespace cupgates;

namespace {

const CupVariant kVariants[] = {CupVariant::kNonAssociative,
                                CupVariant::kSymmetric, CupVariant::kOutsideIn};

std::vector<int> PatternBlocks(const std::string& p, int lambda) {
  if (p == "distinct") {
    return lambda == 2 ? std::vector<int>{0, 1} : std::vector<int>{0, 1, 2};
  }
  if (p == "a1=a2") return {0, 0};
  if (p == "a1=a2=a3") return {0, 0, 0};
  if (p == "a1=a2!=a3") return {0, 0, 1};
  if (p == "a1=a3!=a2") return {0, 1, 0};
  if (p == "a1!=a2=a3") return {0, 1, 1};
  FAIL("unknown pattern " << p);
  return {};
}

const std::vector<Element>& PartOf(const PreOrientation& po, char c) {
  return po.part(c == 'i' ? Part::kIn : c == 'o' ? Part::kOut : Part::kFree);
}

// Parity of |P_1 b_1 ∩ ... ∩ P_m b_m| for the word's letters.
int WordValue(const PreOrientation& po, const std::string& w,
              const std::vector<Element>& b) {
  const FiniteGroup& g = po.element().group();
  std::vector<int> count(g.size(), 0);
  for (std::size_t t = 0; t < w.size(); ++t)
    for (Element x : PartOf(po, w[t])) ++count[g.mul(x, b[t])];
  int n = 0;
  for (int c : count) n += c == static_cast<int>(w.size());
  return n & 1;
}

// Every equation vanishes at every point whose blocks take distinct values.
bool SystemHolds(const std::vector<WordEquation>& sys, const PreOrientation& po,
                 int lambda) {
  const int n = po.element().group().size();
  for (const auto& eq : sys) {
    if (eq.words.empty()) continue;
    const auto blocks = PatternBlocks(eq.pattern, lambda);
    const int nb = *std::max_element(blocks.begin(), blocks.end()) + 1;
    std::vector<Element> b(nb, 0);
    while (true) {
      bool distinct = true;
      for (int i = 0; i < nb; ++i)
        for (int j = i + 1; j < nb; ++j) distinct &= b[i] != b[j];
      if (distinct) {
        int v = 0;
        for (const auto& w : eq.words) v ^= WordValue(po, w, b);
        if (v) return false;
      }
      int i = nb - 1;
      while (i >= 0 && ++b[i] == static_cast<Element>(n)) b[i--] = 0;
      if (i < 0) break;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("raw and simplified word systems cut out the same labelings") {
  std::mt19937_64 rng(31);
  const std::vector<std::vector<int>> groups = {{7}, {8}, {9}, {3, 3}, {2, 4}, {10}};
  int accepted = 0;
  for (int t = 0; t < 600; ++t) {
    auto g = FiniteGroup::Abelian(groups[t % groups.size()]);
    const int w = 3 + static_cast<int>(rng() % 4);
    std::vector<Element> s;
    while (static_cast<int>(s.size()) < w) {
      const Element e = rng() % g->size();
      if (std::find(s.begin(), s.end(), e) == s.end()) s.push_back(e);
    }
    const GroupAlgebraElement e(g, s);
    std::vector<Part> labels(w);
    for (auto& l : labels) l = static_cast<Part>(rng() % 3);
    const PreOrientation po(e, labels);
    for (int lambda : {2, 3}) {
      for (CupVariant v : kVariants) {
        CAPTURE(e.format());
        CAPTURE(po.labels_string());
        CAPTURE(lambda);
        CAPTURE(ToString(v));
        const bool oracle = VerifyPreorientation(po, lambda, v);
        const bool raw = SystemHolds(RawWordSystem(lambda, v), po, lambda);
        const bool parity = (po.in().size() + po.out().size()) % 2 == 0;
        const bool simp =
            parity && SystemHolds(SimplifiedWordSystem(lambda, v), po, lambda);
        CHECK(raw == oracle);
        CHECK(simp == oracle);
        accepted += oracle;
      }
    }
  }
  CHECK(accepted > 0);
}

TEST_CASE("word systems have the expected shape") {
  for (CupVariant v : kVariants) {
    for (int lambda : {2, 3}) {
      for (const auto& eq : SimplifiedWordSystem(lambda, v)) {
        CHECK(eq.pattern != "a1=a2=a3");
        CHECK(eq.pattern != "a1=a2");
        const auto b = PatternBlocks(eq.pattern, lambda);
        const std::size_t nb = *std::max_element(b.begin(), b.end()) + 1;
        for (const auto& w : eq.words) CHECK(w.size() == nb);
      }
    }
  }
  CHECK_THROWS(RawWordSystem(4, CupVariant::kSymmetric));
}

TEST_CASE("configuration counts") {
  const auto na = CupVariant::kNonAssociative;
  auto r = ConfigurationsFor(4, {1, 1, 2}, 2, na);
  CHECK(r.raw_matchings == 3);
  CHECK(r.configurations.size() == 2);
  CHECK(ConfigurationsFor(4, {1, 3, 0}, 2, na).configurations.size() == 4);
  CHECK(ConfigurationsFor(4, {2, 2, 0}, 3, na).configurations.size() == 1);
  CHECK(ConfigurationsFor(6, {2, 4, 0}, 3, na).configurations.size() == 315);
  CHECK(ConfigurationsFor(6, {2, 2, 2}, 3, na).configurations.size() == 1);
  // Odd |in| + |out| fails the parity prefilter.
  const auto odd = ConfigurationsFor(3, {1, 2, 0}, 2, na);
  CHECK_FALSE(odd.viable);
  CHECK(odd.configurations.empty());
}

TEST_CASE("the weight-4 three-copy configuration matches the involution theorem") {
  const auto r = ConfigurationsFor(4, {2, 2, 0}, 3, CupVariant::kNonAssociative);
  REQUIRE(r.configurations.size() == 1);
  const ConditionSet got = r.configurations[0].conditions.canonical();
  bool found = false;
  for (const auto& entry : TheoremConditions(Theorem::kWeight4NonAssociative)) {
    if (!(entry.signature == Signature{2, 2, 0})) continue;
    for (const auto& d : entry.disjuncts) {
      // Equal up to the relations implied by the closure.
      const auto want = d.canonical();
      ConditionSet both = got;
      both.relations.insert(both.relations.end(), want.relations.begin(),
                            want.relations.end());
      found |= ConditionsConsistent(both);
      // Same solution set on every labeling of a small group.
      auto g = FiniteGroup::Abelian({2, 4});
      for (Element a = 0; a < 8; ++a)
        for (Element b = 0; b < 8; ++b)
          for (Element c = 0; c < 8; ++c)
            for (Element e = 0; e < 8; ++e) {
              const std::vector<Element> x = {a, b, c, e};
              CHECK(got.holds(*g, x) == want.holds(*g, x));
            }
    }
  }
  CHECK(found);
}

TEST_CASE("every enumerated configuration is self-consistent") {
  for (CupVariant v : kVariants) {
    for (int lambda : {2, 3}) {
      for (int in = 0; in <= 4; ++in)
        for (int out = 0; in + out <= 4; ++out) {
          const Signature s{in, out, 4 - in - out};
          const auto r = ConfigurationsFor(4, s, lambda, v);
          for (const auto& c : r.configurations) {
            CHECK(ConditionsConsistent(c.conditions));
            CHECK(c.conditions.canonical().canonical().relations ==
                  c.conditions.canonical().relations);
          }
        }
    }
  }
}

TEST_CASE("relations evaluate as quotients") {
  auto g = FiniteGroup::Abelian({12});
  ConditionSet cs;
  cs.relations.push_back({{0, 1}, {2, 3}, false});
  CHECK(cs.holds(*g, {0, 3, 5, 8}));
  CHECK_FALSE(cs.holds(*g, {0, 3, 5, 9}));
  CHECK(cs.to_strings().front() == "g_1^-1 g_2 = g_3^-1 g_4");
}
