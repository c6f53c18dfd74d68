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

#ifndef CUPGATES_SEARCH_HPP_
#define CUPGATES_SEARCH_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "cupgates/complexes.hpp"
#include "cupgates/cup.hpp"
#include "cupgates/json_io.hpp"
#include "cupgates/orientation.hpp"

namespace cupgates {

struct DistancePolicy {
  int w_max = 6;
  std::uint64_t ceiling = 200'000'000;
  int trials = 10'000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

struct SideDistance {
  int lower = 0;   // no logical of smaller weight
  int upper = -1;  // weight of a logical found
  bool exact() const { return lower == upper; }
};

struct DistanceReport {
  bool defined = false;  // false when k = 0
  SideDistance x, z;
  std::string method;    // "exhaustive" or "randomized"
  int trials = 0;
  int d() const { return std::min(x.upper, z.upper); }
  int lower() const { return std::min(x.lower, z.lower); }
  bool exact() const { return defined && lower() == d(); }
};

// Exhaustive by weight up to the ceiling, then a randomized upper bound for
// any side the scan did not settle.
// Reads w_max, ceiling, trials, seed and threads over the defaults in `base`.
DistancePolicy DistancePolicyFromJson(const Json& j, DistancePolicy base = {});

DistanceReport MeasureDistance(const CssCode& code, const DistancePolicy& p);
Json DistanceToJson(const DistanceReport& r);

// Abelian-product automorphisms, found from generator images. Falls back to
// the identity and inversion when the image space exceeds `limit`.
std::vector<std::vector<Element>> AbelianAutomorphisms(
    const FiniteGroup& group, std::uint64_t limit = 2'000'000);

// Smallest translate of `e` that contains the identity.
GroupAlgebraElement TranslationCanonical(const GroupAlgebraElement& e);

// Canonical key of a factor tuple under group automorphisms, translation of
// each factor (commutative groups) and factor order.
std::vector<std::vector<Element>> EquivalenceKey(
    const std::vector<GroupAlgebraElement>& polys);

// Synthesizes the copy-cup circuit for every combination of per-factor
// labelings until one acts nontrivially.
struct GateCheck {
  int combinations = 0;
  int evaluated = 0;
  bool all_preserve = true;
  bool nontrivial = false;
  std::vector<int> witness;  // labeling index per factor
};

struct GateCheckOptions {
  bool stop_at_first = true;
  // When false only the reported circuit (the witness, else the first) is
  // checked for preservation.
  bool verify_all = true;
};

GateCheck CheckGate(const CssCode& code,
                    const std::vector<std::vector<PreOrientation>>& labelings,
                    CupVariant variant, const GateCheckOptions& opts = {});

struct SearchConfig {
  std::vector<GroupPtr> groups;
  int weight = 3;
  int lambda = 2;  // 2 builds square codes, 3 cube codes
  CupVariant variant = CupVariant::kNonAssociative;
  ProductKind product = ProductKind::kBalanced;
  CheckMode mode = CheckMode::kClosedForm;
  int classical_k_max = -1;  // negative disables the filter
  int min_k = 1;
  int min_d = 0;
  bool require_nontrivial = true;
  bool compute_distance = true;
  DistancePolicy distance;
  bool dedup = true;
  std::uint64_t max_combinations = 5'000'000;
  unsigned threads = 0;

  void add_abelian_orders(int lo, int hi);
};

SearchConfig SearchConfigFromJson(const Json& j);

struct SearchResult {
  GroupPtr group;
  std::vector<GroupAlgebraElement> polys;
  std::vector<std::string> labelings;  // witness labeling per factor
  std::vector<Signature> signatures;
  std::size_t n = 0, k = 0;
  std::vector<int> x_weights, z_weights;
  bool gate_evaluated = false;
  bool preserves = false;
  bool nontrivial = false;
  int labeling_combinations = 0;
  bool distance_computed = false;
  DistanceReport distance;
  std::string note;
};

struct SearchStats {
  std::uint64_t elements = 0;
  std::uint64_t classical_pass = 0;
  std::uint64_t oriented = 0;
  std::uint64_t combinations = 0;
  std::uint64_t codes = 0;
  std::uint64_t gate_checks = 0;
};

struct SearchReport {
  std::vector<SearchResult> results;
  SearchStats stats;
  std::vector<std::string> errors;  // per-candidate budget failures
};

SearchReport RunSearch(const SearchConfig& cfg);

Json SearchResultToJson(const SearchResult& r);
Json SearchReportToJson(const SearchReport& r);
std::string SearchReportToCsv(const SearchReport& r);

}  // namespace cupgates

#endif  // CUPGATES_SEARCH_HPP_
