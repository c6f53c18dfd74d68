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

// Acceptance checks. Usage: acceptance <1..10 | all>. Prints one line per
// criterion and exits nonzero if any selected criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "cupgates/complexes.hpp"
#include "cupgates/gates.hpp"
#include "cupgates/json_io.hpp"
#include "cupgates/manifest.hpp"
#include "cupgates/matching.hpp"
#include "cupgates/orientation.hpp"
#include "cupgates/search.hpp"

using namespace cupgates;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Json LoadManifest(const std::string& name) {
  std::ifstream in(std::string(CUPGATES_MANIFEST_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing manifest " + name);
  return Json::parse(in);
}

const CupVariant kVariants[] = {CupVariant::kNonAssociative,
                                CupVariant::kSymmetric, CupVariant::kOutsideIn};

std::vector<std::vector<PreOrientation>> OracleLabelings(
    const CodeSpec& cs, int lambda, CupVariant v) {
  std::vector<std::vector<PreOrientation>> labs;
  for (const auto& p : cs.polys)
    labs.push_back(EnumeratePreorientations(p, lambda, v, CheckMode::kOracle));
  return labs;
}

Json RowSpec(const Json& m, const Json& row) {
  return {{"group", row.at("group")},
          {"polys", row.at("polys")},
          {"product", m.value("product", std::string("balanced"))}};
}

// Weight-2 cube table: n, k, exact distance by weight, CCZ preserved and
// nontrivial.
Outcome Criterion1() {
  const Json m = LoadManifest("search_results2.json");
  const CupVariant v = ParseCupVariant(m.at("variant").get<std::string>());
  std::ostringstream os;
  bool ok = true;
  for (const auto& row : m.at("rows")) {
    const CodeSpec cs = CodeSpecFromJson(RowSpec(m, row));
    const CssCode code = cs.build();
    ExactDistanceOptions eo;
    eo.w_max = 6;
    const auto d = DistanceExactByWeight(code, eo);
    GateCheckOptions go;
    go.stop_at_first = false;
    const GateCheck gc = CheckGate(code, OracleLabelings(cs, 3, v), v, go);
    const bool row_ok = code.n() == row.at("n").get<std::size_t>() &&
                        code.k() == row.at("k").get<std::size_t>() && d &&
                        *d == row.at("d").get<int>() && gc.combinations > 0 &&
                        gc.all_preserve && gc.nontrivial;
    ok &= row_ok;
    os << "[[" << code.n() << "," << code.k() << ","
       << (d ? std::to_string(*d) : "?") << "]]" << (row_ok ? "" : "!") << " ";
  }
  return {ok, os.str()};
}

// Weight-4 cube rows over C7 and C13: labelings valid, every labeling
// combination preserves the codespace and acts trivially.
Outcome Criterion2() {
  const Json m = LoadManifest("search_results.json");
  const CupVariant v = ParseCupVariant(m.at("variant").get<std::string>());
  std::ostringstream os;
  bool ok = true;
  int seen = 0;
  for (const auto& row : m.at("rows")) {
    const auto orders = row.at("group").at("orders").get<std::vector<int>>();
    if (orders != std::vector<int>{7} && orders != std::vector<int>{13}) continue;
    ++seen;
    const CodeSpec cs = CodeSpecFromJson(RowSpec(m, row));
    const CssCode code = cs.build();
    const auto labs = OracleLabelings(cs, 3, v);
    bool oriented = true;
    for (const auto& l : labs) {
      oriented &= !l.empty();
      for (const auto& po : l) oriented &= VerifyPreorientation(po, 3, v);
    }
    GateCheckOptions go;
    go.stop_at_first = false;
    const GateCheck gc = CheckGate(code, labs, v, go);
    const bool row_ok = oriented && gc.combinations > 0 && gc.all_preserve &&
                        !gc.nontrivial &&
                        code.n() == row.at("n").get<std::size_t>() &&
                        code.k() == row.at("k").get<std::size_t>();
    ok &= row_ok;
    os << code.group().description() << " [[" << code.n() << "," << code.k()
       << "]] " << gc.combinations << " combinations, "
       << (gc.nontrivial ? "nontrivial" : "trivial") << "; ";
  }
  return {ok && seen == 2, os.str()};
}

// Sweep of abelian groups of order 2 to 16.
Outcome Criterion3() {
  SearchConfig c;
  c.add_abelian_orders(2, 16);
  c.weight = 4;
  c.lambda = 3;
  c.variant = CupVariant::kSymmetric;
  c.classical_k_max = 3;
  c.distance.trials = 1000;
  const SearchReport r = RunSearch(c);

  const Json m = LoadManifest("non_trivial_logic.json");
  const CodeSpec listed = CodeSpecFromJson(RowSpec(m, m.at("rows")[0]));
  const auto want = EquivalenceKey(listed.polys);
  std::map<std::string, int> by_group;
  bool listed_found = false;
  for (const auto& res : r.results) {
    std::ostringstream key;
    key << res.group->description() << " [[" << res.n << "," << res.k << ","
        << (res.distance.defined ? std::to_string(res.distance.d()) : "?")
        << "]]";
    ++by_group[key.str()];
    if (*res.group == *listed.group && EquivalenceKey(res.polys) == want) {
      listed_found = true;
    }
  }
  std::ostringstream os;
  os << r.results.size() << " inequivalent nontrivial codes:";
  for (const auto& [k, n] : by_group) os << " " << n << "x " << k;
  os << "; listed code " << (listed_found ? "found" : "not found");
  if (!r.errors.empty()) os << "; " << r.errors.size() << " errors";
  return {r.results.size() == 1 && listed_found && r.errors.empty(), os.str()};
}

// CZ tables through the manifest verifier.
Outcome Criterion4() {
  std::ostringstream os;
  bool ok = true;
  for (const char* f : {"weight3_cz.json", "weight4_cz.json"}) {
    const ManifestReport r = VerifyManifest(LoadManifest(f));
    ok &= r.ok() && r.skipped() == 0;
    os << f << " " << r.passed() << "/" << r.rows.size() << " rows; ";
    for (const auto& row : r.rows)
      for (const auto& c : row.checks)
        if (!c.pass) os << row.label << " " << c.name << ": " << c.detail << "; ";
  }
  return {ok, os.str()};
}

Outcome Criterion5() {
  const auto na = CupVariant::kNonAssociative;
  const auto a = ConfigurationsFor(4, {1, 1, 2}, 2, na);
  const auto b = ConfigurationsFor(4, {1, 3, 0}, 2, na);
  const auto c = ConfigurationsFor(4, {2, 2, 0}, 3, na);
  const auto d = ConfigurationsFor(6, {2, 4, 0}, 3, na);
  const auto e = ConfigurationsFor(6, {2, 2, 2}, 3, na);
  // The unique (2,2,0) configuration must cut out the same labelings as the
  // involution theorem.
  bool same = c.configurations.size() == 1;
  if (same) {
    const auto& want = TheoremConditions(Theorem::kWeight4NonAssociative);
    for (auto orders : std::vector<std::vector<int>>{{8}, {2, 4}, {2, 2, 2}}) {
      auto g = FiniteGroup::Abelian(orders);
      const int n = g->size();
      for (int i = 0; i < n * n * n * n; ++i) {
        const std::vector<Element> x = {Element(i % n), Element(i / n % n),
                                        Element(i / n / n % n),
                                        Element(i / n / n / n)};
        bool t = false;
        for (const auto& entry : want)
          for (const auto& dj : entry.disjuncts) t |= dj.holds(*g, x);
        same &= c.configurations[0].conditions.holds(*g, x) == t;
      }
    }
  }
  std::ostringstream os;
  os << "(1,1,2) " << a.raw_matchings << " matchings/" << a.configurations.size()
     << " valid; (1,3,0) " << b.configurations.size() << "; (2,2,0) "
     << c.configurations.size() << (same ? " matching the theorem" : " MISMATCH")
     << "; (2,4,0) " << d.configurations.size() << "; (2,2,2) "
     << e.configurations.size();
  const bool ok = a.raw_matchings == 3 && a.configurations.size() == 2 &&
                  b.configurations.size() == 4 && same &&
                  d.configurations.size() == 315 && e.configurations.size() == 1;
  return {ok, os.str()};
}

std::vector<GroupPtr> SmallGroups() {
  return {FiniteGroup::Abelian({8}), FiniteGroup::Abelian({9}),
          FiniteGroup::Abelian({3, 3})};
}

// No nontrivial three-copy labeling of any weight-3 or weight-5 element.
Outcome Criterion6() {
  std::uint64_t checked = 0, accepted = 0;
  for (const auto& g : SmallGroups())
    for (int w : {3, 5})
      for (const auto& e : EnumerateCheckElements(g, w, false))
        for (const auto& po : AllLabelings(e, true))
          for (CupVariant v : kVariants) {
            ++checked;
            accepted += VerifyPreorientation(po, 3, v);
          }
  std::ostringstream os;
  os << checked << " (element, labeling, variant) triples, " << accepted
     << " accepted";
  return {accepted == 0, os.str()};
}

// (a) closed form vs oracle; (b) fast vs direct synthesis.
Outcome Criterion7() {
  std::uint64_t checked = 0, mismatches = 0;
  for (const auto& g : SmallGroups())
    for (int w : {3, 4})
      for (const auto& e : EnumerateCheckElements(g, w, false))
        for (const auto& po : AllLabelings(e, false))
          for (int lambda : {2, 3})
            for (CupVariant v : kVariants) {
              ++checked;
              mismatches += ClosedFormValid(po, lambda, v) !=
                            VerifyPreorientation(po, lambda, v);
            }

  struct SynthCase {
    std::vector<int> orders;
    std::vector<std::string> polys;
  };
  const std::vector<SynthCase> codes = {
      {{2}, {"1+x", "1+x", "1+x"}},
      {{4}, {"x+x^2", "x+x^2", "x+x^2"}},
      {{7}, {"1+x", "1+x^2", "1+x^3"}},
      {{8}, {"1+x+x^2+x^3", "1+x+x^3+x^6"}},
      {{3, 2, 2}, {"1+x+xy+x^2", "1+x^2+x^2y+x^2z"}},
      {{4, 3}, {"1+x^2+x^3+x^3y^2", "1+xy+x^2y^2+x^3"}},
      {{9}, {"1+x+x^3+x^4", "1+x+x^6+x^7", "1+x^2+x^3+x^5"}},
  };
  int circuits = 0, synth_mismatch = 0;
  for (const auto& sc : codes) {
    CodeSpec cs;
    cs.group = FiniteGroup::Abelian(sc.orders);
    for (const auto& p : sc.polys) cs.polys.push_back(ParsePolynomial(cs.group, p));
    const CssCode code = cs.build();
    const int lambda = static_cast<int>(sc.polys.size());
    for (CupVariant v : kVariants) {
      if (lambda == 2 && v != CupVariant::kNonAssociative) continue;
      // Outside-in three-copy circuits are not synthesized.
      if (v == CupVariant::kOutsideIn) continue;
      const auto labs = OracleLabelings(cs, lambda, v);
      bool any = true;
      for (const auto& l : labs) any &= !l.empty();
      if (!any) continue;
      // The first labeling combination and one with every factor on its
      // last labeling.
      for (int pick = 0; pick < 2; ++pick) {
        std::vector<PreOrientation> ors;
        for (const auto& l : labs) ors.push_back(pick ? l.back() : l.front());
        const GateCircuit fast = lambda == 2 ? SynthCzCircuit(code, ors)
                                             : SynthCczCircuit(code, ors, v);
        ++circuits;
        synth_mismatch += !(fast == SynthDirect(code, ors, v));
      }
    }
  }
  std::ostringstream os;
  os << "(a) " << checked << " checks, " << mismatches << " mismatches; (b) "
     << circuits << " circuits, " << synth_mismatch << " mismatches";
  return {checked > 0 && mismatches == 0 && circuits > 0 && synth_mismatch == 0,
          os.str()};
}

// Weight-4 elements {g, g t, h, h t} with t an involution.
Outcome Criterion8() {
  std::mt19937_64 rng(2026);
  std::vector<GroupPtr> groups;
  for (int n = 4; n <= 24; n += 2)
    for (const auto& t : AbelianGroupTypes(n))
      groups.push_back(FiniteGroup::Abelian(t));
  auto random_element = [&](const GroupPtr& g, Element* inv) {
    std::vector<Element> invs;
    for (int a = 1; a < g->size(); ++a)
      if (g->order_of(a) == 2) invs.push_back(a);
    const Element t = invs[rng() % invs.size()];
    while (true) {
      const Element a = rng() % g->size(), b = rng() % g->size();
      const std::set<Element> s = {a, g->mul(a, t), b, g->mul(b, t)};
      if (s.size() != 4) continue;
      *inv = t;
      return PreOrientation::FromSets(
          GroupAlgebraElement(g, {a, g->mul(a, t), b, g->mul(b, t)}),
          {a, g->mul(a, t)}, {b, g->mul(b, t)});
    }
  };
  int failures = 0, k_zero = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const GroupPtr g = groups[rng() % groups.size()];
    Element t = 0;
    const PreOrientation po = random_element(g, &t);
    const bool accepted =
        VerifyPreorientation(po, 3, CupVariant::kNonAssociative) &&
        TheoremConditionCheck(po, Theorem::kWeight4NonAssociative);
    const auto& d = po.element();
    const bool annihilates =
        AlgebraProduct(d, GroupAlgebraElement(g, {0, t})).empty();
    Element t2 = 0, t3 = 0;
    const auto f2 = random_element(g, &t2).element();
    const auto f3 = random_element(g, &t3).element();
    const CssCode code({TwoTermComplex::FromCoboundary(d),
                        TwoTermComplex::FromCoboundary(f2),
                        TwoTermComplex::FromCoboundary(f3)},
                       ProductKind::kBalanced);
    ExactDistanceOptions eo;
    eo.w_max = 2;
    const bool low = code.k() > 0 && DistanceExactByWeight(code, eo).has_value();
    k_zero += code.k() == 0;
    failures += !(accepted && annihilates && low);
  }
  std::ostringstream os;
  os << "200 elements, " << failures << " failures";
  if (k_zero) os << " (" << k_zero << " with k = 0)";
  return {failures == 0, os.str()};
}

// Symmetric three-copy acceptance implies two-copy acceptance.
Outcome Criterion9() {
  std::uint64_t accepted = 0, failures = 0;
  for (auto orders : std::vector<std::vector<int>>{{8}, {9}}) {
    auto g = FiniteGroup::Abelian(orders);
    for (const auto& e : EnumerateCheckElements(g, 4, false))
      for (const auto& po : AllLabelings(e, true)) {
        if (!VerifyPreorientation(po, 3, CupVariant::kSymmetric)) continue;
        ++accepted;
        failures += !VerifyPreorientation(po, 2, CupVariant::kNonAssociative);
      }
  }
  std::ostringstream os;
  os << accepted << " accepted labelings, " << failures << " failures";
  return {accepted > 0 && failures == 0, os.str()};
}

bool HasTwoCopyLabeling(const GroupAlgebraElement& e) {
  for (const auto& po : AllLabelings(e, true)) {
    if ((po.in().size() + po.out().size()) % 2) continue;
    if (VerifyPreorientation(po, 2, CupVariant::kNonAssociative)) return true;
  }
  return false;
}

// Existence of a two-copy labeling is invariant under translation.
Outcome Criterion10() {
  std::mt19937_64 rng(10);
  std::uint64_t elements = 0, shifts = 0, failures = 0;
  int groups = 0;
  for (int n = 3; n <= 36; ++n) {
    for (const auto& t : AbelianGroupTypes(n)) {
      auto g = FiniteGroup::Abelian(t);
      ++groups;
      std::vector<GroupAlgebraElement> pool = EnumerateCheckElements(g, 3, false);
      if (pool.size() > 1000) {
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.erase(pool.begin() + 1000, pool.end());
      }
      for (const auto& e : pool) {
        ++elements;
        const bool base = HasTwoCopyLabeling(e);
        for (int s = 1; s < n; ++s) {
          ++shifts;
          failures += HasTwoCopyLabeling(e.right_multiply(s)) != base;
        }
      }
    }
  }
  std::ostringstream os;
  os << groups << " groups, " << elements << " elements, " << shifts
     << " translates, " << failures << " failures";
  return {failures == 0, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<int, std::function<Outcome()>> criteria = {
      {1, Criterion1}, {2, Criterion2}, {3, Criterion3}, {4, Criterion4},
      {5, Criterion5}, {6, Criterion6}, {7, Criterion7}, {8, Criterion8},
      {9, Criterion9}, {10, Criterion10}};
  std::vector<int> run;
  const std::string arg = argc > 1 ? argv[1] : "all";
  if (arg == "all") {
    for (const auto& [k, f] : criteria) run.push_back(k);
  } else {
    const int k = std::atoi(arg.c_str());
    if (!criteria.count(k)) {
      std::cerr << "usage: acceptance <1..10 | all>\n";
      return 2;
    }
    run.push_back(k);
  }
  bool all_ok = true;
  for (int k : run) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria.at(k)();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    std::printf("criterion %d: %s (%s) [%.1f s]\n", k, o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), secs);
    std::fflush(stdout);
    all_ok &= o.pass;
  }
  return all_ok ? 0 : 1;
}
