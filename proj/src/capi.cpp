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

#include "cupgates/cupgates.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "cupgates/error.hpp"
#include "cupgates/gates.hpp"
#include "cupgates/json_io.hpp"
#include "cupgates/manifest.hpp"
#include "cupgates/orientation.hpp"
#include "cupgates/search.hpp"

struct cg_code {
  cupgates::CodeSpec spec;
  cupgates::CssCode code;
};

struct cg_circuit {
  cupgates::GateCircuit circuit;
};

namespace {

using cupgates::Json;

thread_local std::string g_last_error;

cg_status Fail(cg_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

cg_status FromCode(cupgates::ErrorCode c) {
  switch (c) {
    case cupgates::ErrorCode::kInvalidArgument:
      return CG_ERR_INVALID_ARGUMENT;
    case cupgates::ErrorCode::kDomain:
      return CG_ERR_DOMAIN;
    case cupgates::ErrorCode::kUnsupported:
      return CG_ERR_UNSUPPORTED;
    case cupgates::ErrorCode::kBudget:
      return CG_ERR_BUDGET;
    case cupgates::ErrorCode::kParse:
      return CG_ERR_PARSE;
  }
  return CG_ERR_INTERNAL;
}

// Runs `body` and converts any exception into a status.
template <typename F>
cg_status Guard(F&& body) {
  try {
    g_last_error.clear();
    body();
    return CG_OK;
  } catch (const cupgates::Error& e) {
    return Fail(FromCode(e.code()), e.what());
  } catch (const nlohmann::json::parse_error& e) {
    return Fail(CG_ERR_PARSE, e.what());
  } catch (const nlohmann::json::exception& e) {
    return Fail(CG_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(CG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(CG_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(CG_ERR_INTERNAL, "unknown error");
  }
}

void Require(const void* p, const char* what) {
  if (p == nullptr) {
    throw cupgates::Error(cupgates::ErrorCode::kInvalidArgument,
                          std::string(what) + " is null");
  }
}

Json ParseArg(const char* text, const char* what) {
  Require(text, what);
  return Json::parse(text);
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

Json MatrixRows(const cupgates::BitMatrix& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    a.push_back(m.row_vector(r).to_string());
  }
  return a;
}

}  // namespace

extern "C" {

const char* cg_version(void) { return "0.1.0"; }

const char* cg_last_error_message(void) { return g_last_error.c_str(); }

void cg_free_string(char* s) { std::free(s); }

cg_status cg_code_build(const char* spec_json, cg_code** out) {
  return Guard([&] {
    Require(out, "out");
    *out = nullptr;
    cupgates::CodeSpec spec =
        cupgates::CodeSpecFromJson(ParseArg(spec_json, "spec"));
    cupgates::CssCode code = spec.build();
    *out = new cg_code{std::move(spec), std::move(code)};
  });
}

void cg_code_destroy(cg_code* code) { delete code; }

cg_status cg_code_params(const cg_code* code, size_t* n, size_t* k) {
  return Guard([&] {
    Require(code, "code");
    if (n) *n = code->code.n();
    if (k) *k = code->code.k();
  });
}

cg_status cg_code_report(const cg_code* code, char** json_out) {
  return Guard([&] {
    Require(code, "code");
    Require(json_out, "json_out");
    *json_out = Dup(cupgates::CodeReport(code->code).dump());
  });
}

cg_status cg_code_matrices(const cg_code* code, char** json_out) {
  return Guard([&] {
    Require(code, "code");
    Require(json_out, "json_out");
    Json j;
    j["hx"] = MatrixRows(code->code.hx());
    j["hz"] = MatrixRows(code->code.hz());
    j["logicals"] = MatrixRows(cupgates::CohomologyBasis(code->code));
    *json_out = Dup(j.dump());
  });
}

cg_status cg_code_distance(const cg_code* code, const char* options_json,
                           char** json_out) {
  return Guard([&] {
    Require(code, "code");
    Require(json_out, "json_out");
    const Json opts =
        options_json ? Json::parse(options_json) : Json::object();
    const cupgates::DistancePolicy p = cupgates::DistancePolicyFromJson(opts);
    const std::string method = opts.value("method", std::string("auto"));
    const auto& c = code->code;
    Json j;
    if (method == "auto") {
      j = cupgates::DistanceToJson(cupgates::MeasureDistance(c, p));
    } else if (method == "exact") {
      cupgates::ExactDistanceOptions eo;
      eo.w_max = p.w_max;
      eo.ceiling = p.ceiling;
      eo.threads = p.threads;
      const auto d = cupgates::DistanceExactByWeight(c, eo);
      j["method"] = "exhaustive";
      j["w_max"] = p.w_max;
      if (d) {
        j["d_exact"] = *d;
      } else {
        j["d_lower"] = p.w_max + 1;
      }
    } else if (method == "randomized") {
      const auto r =
          cupgates::DistanceUpperRandomized(c, p.trials, p.seed, p.threads);
      j["method"] = "randomized";
      j["d_upper"] = r.d();
      j["d_x"] = r.dx;
      j["d_z"] = r.dz;
      j["trials"] = p.trials;
    } else {
      cupgates::ThrowParse("unknown distance method '" + method + "'");
    }
    *json_out = Dup(j.dump());
  });
}

cg_status cg_orient(const char* request_json, char** json_out) {
  return Guard([&] {
    Require(json_out, "json_out");
    const Json req = ParseArg(request_json, "request");
    auto group = cupgates::GroupFromJson(req.at("group"));
    const auto e = cupgates::ElementFromJson(group, req.at("element"));
    const int lambda = req.value("lambda", 2);
    const auto variant = cupgates::ParseCupVariant(
        req.value("variant", std::string("non_associative")));
    const auto mode =
        cupgates::ParseCheckMode(req.value("mode", std::string("oracle")));
    Json list = Json::array();
    for (const auto& po :
         cupgates::EnumeratePreorientations(e, lambda, variant, mode)) {
      list.push_back(cupgates::PreOrientationToJson(po));
    }
    Json j;
    j["element"] = e.format();
    j["lambda"] = lambda;
    j["variant"] = cupgates::ToString(variant);
    j["mode"] = cupgates::ToString(mode);
    j["count"] = list.size();
    j["labelings"] = std::move(list);
    *json_out = Dup(j.dump());
  });
}

cg_status cg_configs(const char* request_json, char** json_out) {
  return Guard([&] {
    Require(json_out, "json_out");
    const Json req = ParseArg(request_json, "request");
    const int w = req.at("weight").get<int>();
    const auto s = req.at("signature").get<std::vector<int>>();
    if (s.size() != 3 || s[0] + s[1] + s[2] != w) {
      cupgates::ThrowDomain("signature must be [in,out,free] summing to weight");
    }
    const int lambda = req.value("lambda", 2);
    const auto variant = cupgates::ParseCupVariant(
        req.value("variant", std::string("non_associative")));
    cupgates::ConfigurationOptions opts;
    opts.weight_cap = req.value("weight_cap", opts.weight_cap);
    opts.node_budget = req.value("node_budget", opts.node_budget);
    const auto r = cupgates::ConfigurationsFor(w, {s[0], s[1], s[2]}, lambda,
                                               variant, opts);
    Json j;
    j["weight"] = w;
    j["signature"] = s;
    j["lambda"] = lambda;
    j["variant"] = cupgates::ToString(variant);
    j["viable"] = r.viable;
    if (!r.reason.empty()) j["reason"] = r.reason;
    j["raw_matchings"] = r.raw_matchings;
    j["valid"] = r.configurations.size();
    Json list = Json::array();
    if (req.value("list", true)) {
      for (const auto& c : r.configurations) {
        list.push_back(cupgates::ConditionSetToJson(c.conditions.canonical()));
      }
    }
    j["configurations"] = std::move(list);
    *json_out = Dup(j.dump());
  });
}

cg_status cg_circuit_synthesize(const cg_code* code, const char* request_json,
                                cg_circuit** out) {
  return Guard([&] {
    Require(code, "code");
    Require(out, "out");
    *out = nullptr;
    const Json req =
        request_json ? Json::parse(request_json) : Json::object();
    const auto variant = cupgates::ParseCupVariant(
        req.value("variant", std::string("non_associative")));
    const std::string select = req.value("select", std::string("first"));
    if (select != "first" && select != "nontrivial") {
      cupgates::ThrowParse("unknown labeling selection '" + select + "'");
    }
    const auto& polys = code->spec.polys;
    const int lambda = static_cast<int>(polys.size());
    std::vector<cupgates::PreOrientation> ors;
    if (req.contains("labelings")) {
      const auto labs = req.at("labelings").get<std::vector<std::string>>();
      if (labs.size() != polys.size()) {
        cupgates::ThrowDomain("need one labeling per factor");
      }
      for (std::size_t i = 0; i < labs.size(); ++i) {
        ors.push_back(cupgates::ParseLabels(polys[i], labs[i]));
      }
    } else {
      std::vector<std::vector<cupgates::PreOrientation>> all;
      for (const auto& p : polys) {
        all.push_back(cupgates::EnumeratePreorientations(
            p, lambda, variant, cupgates::CheckMode::kOracle));
        if (all.back().empty()) {
          cupgates::ThrowDomain("factor " + p.format() +
                                " has no valid labeling");
        }
      }
      std::vector<int> pick(all.size(), 0);
      if (select == "nontrivial") {
        cupgates::GateCheckOptions go;
        go.verify_all = false;
        const auto gc = cupgates::CheckGate(code->code, all, variant, go);
        if (gc.nontrivial) pick = gc.witness;
      }
      for (std::size_t i = 0; i < all.size(); ++i) {
        ors.push_back(all[i][pick[i]]);
      }
    }
    cupgates::GateCircuit c;
    if (req.value("direct", false)) {
      c = cupgates::SynthDirect(code->code, ors, variant);
    } else if (lambda == 2) {
      c = cupgates::SynthCzCircuit(code->code, ors);
    } else {
      c = cupgates::SynthCczCircuit(code->code, ors, variant);
    }
    *out = new cg_circuit{std::move(c)};
  });
}

cg_status cg_circuit_parse(const cg_code* code, const char* circuit_json,
                           cg_circuit** out) {
  return Guard([&] {
    Require(code, "code");
    Require(out, "out");
    *out = nullptr;
    auto c = cupgates::CircuitFromJson(ParseArg(circuit_json, "circuit"),
                                       code->code.n());
    *out = new cg_circuit{std::move(c)};
  });
}

cg_status cg_circuit_json(const cg_circuit* circuit, char** json_out) {
  return Guard([&] {
    Require(circuit, "circuit");
    Require(json_out, "json_out");
    *json_out = Dup(cupgates::CircuitToJson(circuit->circuit).dump());
  });
}

cg_status cg_circuit_gate_count(const cg_circuit* circuit, size_t* count) {
  return Guard([&] {
    Require(circuit, "circuit");
    Require(count, "count");
    *count = circuit->circuit.gates.size();
  });
}

void cg_circuit_destroy(cg_circuit* circuit) { delete circuit; }

cg_status cg_circuit_verify(const cg_code* code, const cg_circuit* circuit,
                            char** json_out) {
  return Guard([&] {
    Require(code, "code");
    Require(circuit, "circuit");
    Require(json_out, "json_out");
    const auto& c = circuit->circuit;
    if (c.n != code->code.n()) {
      cupgates::ThrowDomain("circuit and code sizes differ");
    }
    const auto basis = cupgates::CohomologyBasis(code->code);
    const auto act = c.arity == 2 ? cupgates::LogicalActionCz(c, basis)
                                  : cupgates::LogicalActionCcz(c, basis);
    Json j;
    j["gates"] = c.gates.size();
    j["preserves"] = cupgates::PreservesCodespace(code->code, c);
    j["nontrivial"] = act.nontrivial;
    j["witness"] = act.witness;
    *json_out = Dup(j.dump());
  });
}

cg_status cg_search(const char* config_json, const char* format, char** out) {
  return Guard([&] {
    Require(out, "out");
    const auto cfg =
        cupgates::SearchConfigFromJson(ParseArg(config_json, "config"));
    const std::string fmt = format ? format : "json";
    if (fmt != "json" && fmt != "csv") {
      cupgates::ThrowParse("unknown output format '" + fmt + "'");
    }
    const auto report = cupgates::RunSearch(cfg);
    *out = Dup(fmt == "csv" ? cupgates::SearchReportToCsv(report)
                            : cupgates::SearchReportToJson(report).dump());
  });
}

cg_status cg_verify_manifest(const char* manifest_json,
                             const char* options_json, char** json_out) {
  return Guard([&] {
    Require(json_out, "json_out");
    const Json m = ParseArg(manifest_json, "manifest");
    cupgates::ManifestOptions opts;
    if (options_json) {
      const Json o = Json::parse(options_json);
      if (o.contains("distance")) {
        opts.distance = cupgates::DistancePolicyFromJson(o.at("distance"));
      }
      opts.check_distance = o.value("check_distance", opts.check_distance);
      opts.check_gates = o.value("check_gates", opts.check_gates);
      if (o.contains("rows")) opts.rows = o.at("rows").get<std::vector<int>>();
    }
    *json_out = Dup(
        cupgates::ManifestReportToJson(cupgates::VerifyManifest(m, opts))
            .dump());
  });
}

}  // extern "C"
