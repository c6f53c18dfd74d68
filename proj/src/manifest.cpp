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

#include "cupgates/manifest.hpp"

#include <algorithm>

#include "cupgates/error.hpp"

namespace cupgates {

int ManifestReport::passed() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](auto& r) {
    return r.status == "pass";
  }));
}
int ManifestReport::failed() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](auto& r) {
    return r.status == "fail";
  }));
}
int ManifestReport::skipped() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](auto& r) {
    return r.status == "skipped";
  }));
}

namespace {

std::string WeightsText(const std::vector<int>& w) {
  std::string s;
  for (int x : w) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "{" + s + "}";
}

class RowChecker {
 public:
  explicit RowChecker(RowOutcome* row) : row_(row) {}
  void check(const std::string& name, bool pass, const std::string& detail) {
    row_->checks.push_back({name, pass, detail});
  }
  template <typename T>
  void expect_eq(const std::string& name, const T& got, const T& want) {
    check(name, got == want,
          "got " + std::to_string(got) + ", want " + std::to_string(want));
  }

 private:
  RowOutcome* row_;
};

DistancePolicy PolicyFrom(const Json& m, const ManifestOptions& opts) {
  if (opts.distance) return *opts.distance;
  if (m.contains("distance")) return DistancePolicyFromJson(m.at("distance"));
  return {};
}

void CheckDistance(const CssCode& code, const Json& row,
                   const DistancePolicy& policy, RowOutcome* out) {
  RowChecker rc(out);
  const int want = row.at("d").get<int>();
  const DistanceReport dr = MeasureDistance(code, policy);
  out->measured["distance"] = DistanceToJson(dr);
  if (!dr.defined) {
    rc.check("distance", false, "code has no logical qubits");
    return;
  }
  const int floor = std::min(6, want);
  std::string detail = "upper " + std::to_string(dr.d()) + ", lower " +
                       std::to_string(dr.lower()) + " (" + dr.method + ")";
  if (want <= 6) {
    rc.check("distance_exact", dr.exact() && dr.d() == want,
             detail + ", want exact " + std::to_string(want));
  } else {
    rc.check("distance_upper", dr.d() == want,
             detail + ", want " + std::to_string(want));
    rc.check("distance_exclusion", dr.lower() >= floor,
             "no logical below " + std::to_string(dr.lower()) + ", need " +
                 std::to_string(floor));
  }
}

RowOutcome VerifyRow(const Json& m, const Json& row, int index,
                     const ManifestOptions& opts) {
  RowOutcome out;
  out.index = index;
  RowChecker rc(&out);
  const int lambda = m.value("lambda", 2);
  const CupVariant variant =
      ParseCupVariant(m.value("variant", std::string("non_associative")));
  if (row.contains("skip")) {
    out.label = row.value("label", "[[" + row.value("n", Json()).dump() + "," +
                                       row.value("k", Json()).dump() + "]]");
    out.status = "skipped";
    for (const auto& f : row.value("flags", Json::array()))
      out.flags.push_back(f.get<std::string>());
    out.flags.push_back("skipped (out of scope): " +
                        row.at("skip").get<std::string>());
    return out;
  }
  Json spec = {{"group", row.at("group")},
               {"polys", row.at("polys")},
               {"product", m.value("product", std::string("balanced"))}};
  const CodeSpec cs = CodeSpecFromJson(spec);
  std::string label = row.value("label", std::string());
  if (label.empty()) {
    label = cs.group->description() + " [[" +
            std::to_string(row.at("n").get<int>()) + "," +
            std::to_string(row.at("k").get<int>()) + "]]";
  }
  out.label = label;
  if (row.contains("flags")) {
    for (const auto& f : row.at("flags")) out.flags.push_back(f.get<std::string>());
  }

  // Polynomial weights after reduction in the group.
  std::vector<int> weights;
  for (const auto& p : cs.polys) weights.push_back(p.weight());
  out.measured["poly_weights"] = weights;
  if (row.contains("poly_weights")) {
    const auto want = row.at("poly_weights").get<std::vector<int>>();
    rc.check("poly_weights", weights == want,
             "got " + WeightsText(weights) + ", want " + WeightsText(want));
  }

  const CssCode code = cs.build();
  out.measured["n"] = code.n();
  out.measured["k"] = code.k();
  rc.expect_eq("n", static_cast<int>(code.n()), row.at("n").get<int>());
  rc.expect_eq("k", static_cast<int>(code.k()), row.at("k").get<int>());
  const auto xw = RowWeightSet(code.hx());
  const auto zw = RowWeightSet(code.hz());
  out.measured["x_check_weights"] = xw;
  out.measured["z_check_weights"] = zw;
  for (const char* key : {"x_check_weight", "z_check_weight"}) {
    const bool is_x = key[0] == 'x';
    const Json& src = row.contains(key) ? row : m;
    if (!src.contains(key)) continue;
    const std::vector<int> want = {src.at(key).get<int>()};
    const auto& got = is_x ? xw : zw;
    rc.check(key, got == want,
             "got " + WeightsText(got) + ", want " + WeightsText(want));
  }

  // Pre-orientations per factor, from the brute-force oracle.
  std::vector<std::vector<PreOrientation>> labs;
  bool all_oriented = true;
  for (std::size_t i = 0; i < cs.polys.size(); ++i) {
    labs.push_back(EnumeratePreorientations(cs.polys[i], lambda, variant,
                                            CheckMode::kOracle));
    if (labs.back().empty()) all_oriented = false;
  }
  rc.check("preorientation", all_oriented,
           "every factor has a valid labeling for lambda " +
               std::to_string(lambda));
  if (m.contains("also_lambda")) {
    for (int extra : m.at("also_lambda").get<std::vector<int>>()) {
      bool ok = true;
      for (const auto& p : cs.polys) {
        if (EnumeratePreorientations(p, extra, variant, CheckMode::kOracle)
                .empty()) {
          ok = false;
        }
      }
      rc.check("preorientation_lambda" + std::to_string(extra), ok,
               "every factor has a valid labeling for lambda " +
                   std::to_string(extra));
    }
  }
  if (row.contains("assignments")) {
    const auto want = row.at("assignments").get<std::vector<std::vector<int>>>();
    bool ok = want.size() == labs.size();
    for (std::size_t i = 0; ok && i < want.size(); ++i) {
      const Signature s{want[i].at(0), want[i].at(1), want[i].at(2)};
      std::vector<PreOrientation> keep;
      for (const auto& po : labs[i])
        if (po.signature() == s) keep.push_back(po);
      if (keep.empty()) ok = false;
      labs[i] = std::move(keep);
    }
    rc.check("assignments", ok, "listed assignments have valid labelings");
    if (!ok) all_oriented = false;
  }

  const bool gate = m.value("gate", true) && opts.check_gates;
  if (row.contains("skip_gate")) {
    out.flags.push_back("gate skipped (out of scope): " +
                        row.at("skip_gate").get<std::string>());
  } else if (gate && all_oriented) {
    const GateCheck gc = CheckGate(code, labs, variant);
    out.measured["labeling_combinations"] = gc.combinations;
    out.measured["nontrivial"] = gc.nontrivial;
    out.measured["preserves"] = gc.all_preserve;
    rc.check("preservation", gc.all_preserve,
             std::to_string(gc.evaluated) + " circuits checked");
    const bool want = row.value("nontrivial", m.value("nontrivial", true));
    rc.check("logical_action", gc.nontrivial == want,
             std::string("nontrivial ") + (gc.nontrivial ? "true" : "false") +
                 ", want " + (want ? "true" : "false"));
  }

  if (opts.check_distance && row.contains("d") &&
      m.value("check_distance", true)) {
    CheckDistance(code, row, PolicyFrom(m, opts), &out);
  }
  bool pass = true;
  for (const auto& c : out.checks) pass = pass && c.pass;
  out.status = pass ? "pass" : "fail";
  return out;
}

}  // namespace

ManifestReport VerifyManifest(const Json& manifest,
                              const ManifestOptions& opts) {
  ManifestReport rep;
  try {
    rep.table = manifest.value("table", std::string());
    const Json& rows = manifest.at("rows");
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (!opts.rows.empty() &&
          std::find(opts.rows.begin(), opts.rows.end(), i) == opts.rows.end()) {
        continue;
      }
      rep.rows.push_back(VerifyRow(manifest, rows[i], i, opts));
    }
  } catch (const nlohmann::json::exception& e) {
    ThrowParse(std::string("manifest: ") + e.what());
  }
  return rep;
}

Json ManifestReportToJson(const ManifestReport& r) {
  Json j;
  j["table"] = r.table;
  j["passed"] = r.passed();
  j["failed"] = r.failed();
  j["skipped"] = r.skipped();
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json x;
    x["index"] = row.index;
    x["label"] = row.label;
    x["status"] = row.status;
    Json checks = Json::array();
    for (const auto& c : row.checks) {
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    x["checks"] = std::move(checks);
    if (!row.flags.empty()) x["flags"] = row.flags;
    x["measured"] = row.measured;
    rows.push_back(std::move(x));
  }
  j["rows"] = std::move(rows);
  return j;
}

}  // namespace cupgates
