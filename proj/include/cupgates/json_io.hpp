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

#ifndef CUPGATES_JSON_IO_HPP_
#define CUPGATES_JSON_IO_HPP_

#include <string>
#include <vector>

#include "json.hpp"

#include "cupgates/complexes.hpp"
#include "cupgates/cup.hpp"
#include "cupgates/gates.hpp"
#include "cupgates/matching.hpp"
#include "cupgates/group.hpp"

namespace cupgates {

using Json = nlohmann::ordered_json;

// {"orders":[9,4]} or {"cayley":[[...],...]}. A bare array is read as orders.
GroupPtr GroupFromJson(const Json& j);
Json GroupToJson(const FiniteGroup& group);

// Compact group text: "9x4" or "C9xC4".
GroupPtr ParseGroupText(const std::string& text);

// A polynomial string, a list of exponent vectors, or a list of element
// indices (the only form accepted for Cayley-table groups).
GroupAlgebraElement ElementFromJson(GroupPtr group, const Json& j);
Json ElementToJson(const GroupAlgebraElement& e);

struct CodeSpec {
  GroupPtr group;
  std::vector<GroupAlgebraElement> polys;
  ProductKind product = ProductKind::kBalanced;
  CssCode build() const;
};

// {"group":..., "polys":[...], "product":"balanced"}
CodeSpec CodeSpecFromJson(const Json& j);
Json CodeSpecToJson(const CodeSpec& spec);

Json PreOrientationToJson(const PreOrientation& po);
Json ConditionSetToJson(const ConditionSet& cs);

// {"arity":2,"gates":[[i,j],...]} with copy-relative qubit indices.
Json CircuitToJson(const GateCircuit& circuit);
GateCircuit CircuitFromJson(const Json& j, std::size_t n);

// Parameters, check weights and sector layout. Distance fields are added by
// callers that computed one.
Json CodeReport(const CssCode& code);

std::vector<int> RowWeightSet(const BitMatrix& m);

}  // namespace cupgates

#endif  // CUPGATES_JSON_IO_HPP_
