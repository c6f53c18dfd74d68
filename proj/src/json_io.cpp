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

#include "cupgates/json_io.hpp"

#include <algorithm>
#include <set>

#include "cupgates/error.hpp"

namespace cupgates {

namespace {

std::vector<int> ParseOrders(const std::string& text) {
  std::vector<int> orders;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) ThrowParse("bad group text '" + text + "'");
    orders.push_back(std::stoi(cur));
    cur.clear();
  };
  for (char c : text) {
    if (c == 'C' || c == 'c' || c == ' ' || c == '_') continue;
    if (c == 'x' || c == 'X' || c == '*' || c == ',') {
      flush();
    } else if (c >= '0' && c <= '9') {
      cur += c;
    } else {
      ThrowParse("bad group text '" + text + "'");
    }
  }
  flush();
  return orders;
}

}  // namespace

GroupPtr GroupFromJson(const Json& j) {
  try {
    if (j.is_string()) return ParseGroupText(j.get<std::string>());
    if (j.is_array()) return FiniteGroup::Abelian(j.get<std::vector<int>>());
    if (!j.is_object()) ThrowParse("group spec must be an object");
    if (j.contains("orders")) {
      return FiniteGroup::Abelian(j.at("orders").get<std::vector<int>>());
    }
    if (j.contains("cayley")) {
      return FiniteGroup::FromCayley(
          j.at("cayley").get<std::vector<std::vector<int>>>());
    }
  } catch (const nlohmann::json::exception& e) {
    ThrowParse(std::string("group spec: ") + e.what());
  }
  ThrowParse("group spec needs 'orders' or 'cayley'");
}

Json GroupToJson(const FiniteGroup& group) {
  Json j;
  if (group.is_abelian_product()) {
    j["orders"] = group.orders();
    return j;
  }
  std::vector<std::vector<int>> t(group.size(), std::vector<int>(group.size()));
  for (int a = 0; a < group.size(); ++a)
    for (int b = 0; b < group.size(); ++b)
      t[a][b] = static_cast<int>(group.mul(a, b));
  j["cayley"] = t;
  return j;
}

GroupPtr ParseGroupText(const std::string& text) {
  return FiniteGroup::Abelian(ParseOrders(text));
}

GroupAlgebraElement ElementFromJson(GroupPtr group, const Json& j) {
  if (j.is_string()) return ParsePolynomial(group, j.get<std::string>());
  if (!j.is_array() || j.empty()) ThrowParse("element spec must be non-empty");
  std::vector<Element> terms;
  for (const auto& t : j) {
    if (t.is_array()) {
      if (!group->is_abelian_product()) {
        ThrowParse("exponent vectors need an abelian product group");
      }
      const auto e = t.get<std::vector<int>>();
      if (e.size() != group->orders().size()) {
        ThrowParse("exponent vector length differs from group rank");
      }
      terms.push_back(group->from_exponents(e));
    } else if (t.is_number_integer()) {
      const long long v = t.get<long long>();
      if (v < 0 || v >= group->size()) ThrowParse("element index out of range");
      terms.push_back(static_cast<Element>(v));
    } else {
      ThrowParse("bad element term");
    }
  }
  return GroupAlgebraElement(std::move(group), std::move(terms));
}

Json ElementToJson(const GroupAlgebraElement& e) {
  Json j = Json::array();
  for (Element g : e.support()) {
    if (e.group().is_abelian_product()) {
      j.push_back(e.group().exponents(g));
    } else {
      j.push_back(g);
    }
  }
  return j;
}

CssCode CodeSpec::build() const {
  std::vector<TwoTermComplex> f;
  for (const auto& p : polys) f.push_back(TwoTermComplex::FromCoboundary(p));
  return BuildProductCode(std::move(f), product);
}

CodeSpec CodeSpecFromJson(const Json& j) {
  if (!j.is_object()) ThrowParse("code spec must be an object");
  if (!j.contains("group") || !j.contains("polys")) {
    ThrowParse("code spec needs 'group' and 'polys'");
  }
  CodeSpec spec;
  spec.group = GroupFromJson(j.at("group"));
  for (const auto& p : j.at("polys")) {
    spec.polys.push_back(ElementFromJson(spec.group, p));
  }
  if (j.contains("product")) {
    spec.product = ParseProductKind(j.at("product").get<std::string>());
  }
  if (spec.polys.size() != 2 && spec.polys.size() != 3) {
    ThrowDomain("a code needs 2 or 3 polynomials");
  }
  return spec;
}

Json CodeSpecToJson(const CodeSpec& spec) {
  Json j;
  j["group"] = GroupToJson(*spec.group);
  j["polys"] = Json::array();
  for (const auto& p : spec.polys) {
    if (spec.group->is_abelian_product()) {
      j["polys"].push_back(p.format());
    } else {
      j["polys"].push_back(ElementToJson(p));
    }
  }
  j["product"] = ToString(spec.product);
  return j;
}

Json PreOrientationToJson(const PreOrientation& po) {
  const FiniteGroup& g = po.element().group();
  auto names = [&](const std::vector<Element>& s) {
    Json a = Json::array();
    for (Element e : s) a.push_back(g.format(e));
    return a;
  };
  const Signature sig = po.signature();
  Json j;
  j["labels"] = po.labels_string();
  j["in"] = names(po.in());
  j["out"] = names(po.out());
  j["free"] = names(po.free());
  j["signature"] = {sig.in, sig.out, sig.free};
  return j;
}

Json ConditionSetToJson(const ConditionSet& cs) {
  Json j;
  j["relations"] = cs.to_strings();
  if (!cs.source.empty()) j["source"] = cs.source;
  return j;
}

Json CircuitToJson(const GateCircuit& circuit) {
  Json j;
  j["arity"] = circuit.arity;
  j["n"] = circuit.n;
  Json gates = Json::array();
  for (const auto& g : circuit.gates) {
    Json t = Json::array();
    for (int c = 0; c < circuit.arity; ++c) t.push_back(g[c]);
    gates.push_back(std::move(t));
  }
  j["gates"] = std::move(gates);
  return j;
}

GateCircuit CircuitFromJson(const Json& j, std::size_t n) {
  GateCircuit c;
  try {
    c.arity = j.at("arity").get<int>();
    if (c.arity != 2 && c.arity != 3) ThrowParse("arity must be 2 or 3");
    c.n = j.contains("n") ? j.at("n").get<std::size_t>() : n;
    if (n != 0 && c.n != n) ThrowParse("circuit size differs from code");
    std::set<std::array<std::uint32_t, 3>> seen;
    for (const auto& t : j.at("gates")) {
      const auto v = t.get<std::vector<std::uint32_t>>();
      if (static_cast<int>(v.size()) != c.arity) ThrowParse("gate arity");
      std::array<std::uint32_t, 3> g{};
      for (int i = 0; i < c.arity; ++i) {
        if (v[i] >= c.n) ThrowParse("gate qubit out of range");
        g[i] = v[i];
      }
      // Repeated gates cancel.
      if (!seen.insert(g).second) seen.erase(g);
    }
    c.gates.assign(seen.begin(), seen.end());
  } catch (const nlohmann::json::exception& e) {
    ThrowParse(std::string("circuit: ") + e.what());
  }
  return c;
}

std::vector<int> RowWeightSet(const BitMatrix& m) {
  std::set<int> s;
  for (std::size_t w : m.row_weights()) s.insert(static_cast<int>(w));
  return {s.begin(), s.end()};
}

Json CodeReport(const CssCode& code) {
  Json j;
  j["group"] = code.group().description();
  j["shape"] = code.shape();
  j["product"] = ToString(code.product());
  Json polys = Json::array();
  for (const auto& f : code.factors()) polys.push_back(f.coboundary().format());
  j["polys"] = std::move(polys);
  j["n"] = code.n();
  j["k"] = code.k();
  j["hx_rows"] = code.hx().rows();
  j["hz_rows"] = code.hz().rows();
  j["x_check_weights"] = RowWeightSet(code.hx());
  j["z_check_weights"] = RowWeightSet(code.hz());
  j["sectors"] = code.num_factors();
  j["sector_size"] = code.sector_size();
  return j;
}

}  // namespace cupgates
