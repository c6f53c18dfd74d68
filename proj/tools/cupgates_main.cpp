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

// Command-line front end over the C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cupgates/cupgates.h"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

struct CodeArgs {
  std::string group;
  std::vector<std::string> polys;
  std::string product = "balanced";
  std::string spec_file;
};

struct Options {
  CodeArgs code;
  std::string variant = "non_associative";
  int lambda = 2;
  std::string mode = "oracle";
  int weight = 4;
  std::vector<int> signature;
  int weight_cap = 8;
  std::vector<std::string> labelings;
  bool direct = false;
  bool any = false;
  std::string circuit_file;
  int wmax = 6;
  double ceiling = 2e8;
  int trials = 10000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::string method = "auto";
  std::string config_file;
  std::vector<int> orders;
  std::vector<std::string> groups;
  int classical_k_max = -1;
  int min_d = 0;
  bool no_distance = false;
  std::string manifest_file;
  std::vector<int> rows;
  bool no_gates = false;
  std::string out = "json";
  bool pretty = false;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Owns a string returned by the library.
struct CString {
  char* p = nullptr;
  ~CString() { cg_free_string(p); }
};

void Check(cg_status s) {
  if (s != CG_OK) {
    throw std::runtime_error("error " + std::to_string(s) + ": " +
                             cg_last_error_message());
  }
}

void Emit(const Options& o, const std::string& text) {
  if (o.pretty && o.out == "json") {
    std::cout << Json::parse(text).dump(2) << "\n";
  } else {
    std::cout << text << (text.empty() || text.back() != '\n' ? "\n" : "");
  }
}

std::string CodeSpec(const CodeArgs& a) {
  if (!a.spec_file.empty()) return ReadFile(a.spec_file);
  if (a.group.empty() || a.polys.empty()) {
    throw std::runtime_error("give --spec or --group with --poly per factor");
  }
  Json j;
  j["group"] = a.group;
  j["polys"] = a.polys;
  j["product"] = a.product;
  return j.dump();
}

struct Code {
  cg_code* h = nullptr;
  explicit Code(const CodeArgs& a) { Check(cg_code_build(CodeSpec(a).c_str(), &h)); }
  ~Code() { cg_code_destroy(h); }
};

struct Circuit {
  cg_circuit* h = nullptr;
  ~Circuit() { cg_circuit_destroy(h); }
};

std::string DistanceOptions(const Options& o) {
  Json j;
  j["w_max"] = o.wmax;
  j["ceiling"] = o.ceiling;
  j["trials"] = o.trials;
  j["seed"] = o.seed;
  j["threads"] = o.threads;
  j["method"] = o.method;
  return j.dump();
}

void Synthesize(const Options& o, const Code& code, Circuit* c) {
  if (!o.circuit_file.empty()) {
    Check(cg_circuit_parse(code.h, ReadFile(o.circuit_file).c_str(), &c->h));
    return;
  }
  Json req;
  req["variant"] = o.variant;
  req["direct"] = o.direct;
  if (!o.labelings.empty()) req["labelings"] = o.labelings;
  if (o.any) req["select"] = "nontrivial";
  Check(cg_circuit_synthesize(code.h, req.dump().c_str(), &c->h));
}

void AddCodeOptions(CLI::App* sub, CodeArgs* a) {
  sub->add_option("--group", a->group, "abelian group, e.g. 9 or 3x3");
  sub->add_option("--poly", a->polys, "coboundary polynomial, once per factor")
      ->take_all();
  sub->add_option("--product", a->product, "balanced or hypergraph");
  sub->add_option("--spec", a->spec_file, "code spec JSON file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Copy-cup gates on group-algebra product codes"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--out", o.out, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--pretty", o.pretty, "indent JSON output");
  app.set_version_flag("--version", std::string(cg_version()));

  auto* build = app.add_subcommand("build", "build a code and report n, k");
  AddCodeOptions(build, &o.code);
  bool matrices = false;
  build->add_flag("--matrices", matrices, "also print hx, hz and logicals");

  auto* orient = app.add_subcommand("orient", "valid labelings of an element");
  orient->add_option("--group", o.code.group)->required();
  orient->add_option("--poly", o.code.polys)->required()->expected(1);
  orient->add_option("--lambda", o.lambda);
  orient->add_option("--variant", o.variant);
  orient->add_option("--mode", o.mode, "oracle or closed_form");

  auto* configs = app.add_subcommand("configs", "term pairings per signature");
  configs->add_option("--weight", o.weight)->required();
  configs->add_option("--signature", o.signature, "in,out,free")
      ->required()
      ->delimiter(',')
      ->expected(3);
  configs->add_option("--lambda", o.lambda);
  configs->add_option("--variant", o.variant);
  configs->add_option("--weight-cap", o.weight_cap);

  auto* synth = app.add_subcommand("synth", "synthesize a copy-cup circuit");
  auto* vgate = app.add_subcommand("verify-gate",
                                   "check preservation and logical action");
  for (auto* sub : {synth, vgate}) {
    AddCodeOptions(sub, &o.code);
    sub->add_option("--variant", o.variant);
    sub->add_option("--labeling", o.labelings, "labels per factor, e.g. IOFF")
        ->take_all();
    sub->add_flag("--direct", o.direct, "expand every coinvariant term");
    sub->add_flag("--nontrivial", o.any,
                  "pick a labeling combination with nontrivial action");
  }
  vgate->add_option("--circuit", o.circuit_file, "circuit JSON file");

  auto* dist = app.add_subcommand("distance", "code distance");
  AddCodeOptions(dist, &o.code);
  dist->add_option("--wmax", o.wmax);
  dist->add_option("--ceiling", o.ceiling);
  dist->add_option("--trials", o.trials);
  dist->add_option("--seed", o.seed);
  dist->add_option("--threads", o.threads);
  dist->add_option("--method", o.method)
      ->check(CLI::IsMember({"auto", "exact", "randomized"}));

  auto* search = app.add_subcommand("search", "search for codes with gates");
  search->add_option("--config", o.config_file, "search config JSON file");
  search->add_option("--orders", o.orders, "lo,hi abelian group orders")
      ->delimiter(',')
      ->expected(2);
  search->add_option("--group", o.groups, "group, repeatable")->take_all();
  search->add_option("--weight", o.weight);
  search->add_option("--lambda", o.lambda);
  search->add_option("--variant", o.variant);
  search->add_option("--product", o.code.product);
  search->add_option("--classical-kmax", o.classical_k_max);
  search->add_option("--min-d", o.min_d);
  search->add_flag("--no-distance", o.no_distance);
  search->add_option("--wmax", o.wmax);
  search->add_option("--trials", o.trials);
  search->add_option("--seed", o.seed);

  auto* vman = app.add_subcommand("verify-manifest", "check a table manifest");
  vman->add_option("manifest", o.manifest_file)->required();
  vman->add_option("--rows", o.rows, "zero-based row indices")->delimiter(',');
  vman->add_flag("--no-distance", o.no_distance);
  vman->add_flag("--no-gates", o.no_gates);
  vman->add_option("--wmax", o.wmax);
  vman->add_option("--trials", o.trials);
  vman->add_option("--seed", o.seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) {
      Code code(o.code);
      CString s;
      Check(matrices ? cg_code_matrices(code.h, &s.p)
                     : cg_code_report(code.h, &s.p));
      Emit(o, s.p);
    } else if (*orient) {
      Json req;
      req["group"] = o.code.group;
      req["element"] = o.code.polys.front();
      req["lambda"] = o.lambda;
      req["variant"] = o.variant;
      req["mode"] = o.mode;
      CString s;
      Check(cg_orient(req.dump().c_str(), &s.p));
      Emit(o, s.p);
    } else if (*configs) {
      Json req;
      req["weight"] = o.weight;
      req["signature"] = o.signature;
      req["lambda"] = o.lambda;
      req["variant"] = o.variant;
      req["weight_cap"] = o.weight_cap;
      CString s;
      Check(cg_configs(req.dump().c_str(), &s.p));
      Emit(o, s.p);
    } else if (*synth) {
      Code code(o.code);
      Circuit c;
      Synthesize(o, code, &c);
      CString s;
      Check(cg_circuit_json(c.h, &s.p));
      Emit(o, s.p);
    } else if (*vgate) {
      Code code(o.code);
      Circuit c;
      Synthesize(o, code, &c);
      CString s;
      Check(cg_circuit_verify(code.h, c.h, &s.p));
      Emit(o, s.p);
      return Json::parse(s.p).at("preserves").get<bool>() ? 0 : 1;
    } else if (*dist) {
      Code code(o.code);
      CString s;
      Check(cg_code_distance(code.h, DistanceOptions(o).c_str(), &s.p));
      Emit(o, s.p);
    } else if (*search) {
      Json cfg = o.config_file.empty() ? Json::object()
                                       : Json::parse(ReadFile(o.config_file));
      if (!o.orders.empty()) cfg["abelian_orders"] = o.orders;
      if (!o.groups.empty()) cfg["groups"] = o.groups;
      auto set = [&](CLI::App* sub, const char* flag, const char* key,
                     const auto& v) {
        if (sub->count(flag) > 0 || !cfg.contains(key)) cfg[key] = v;
      };
      set(search, "--weight", "weight", o.weight);
      set(search, "--lambda", "lambda", o.lambda);
      set(search, "--variant", "variant", o.variant);
      set(search, "--product", "product", o.code.product);
      set(search, "--classical-kmax", "classical_k_max", o.classical_k_max);
      set(search, "--min-d", "min_d", o.min_d);
      if (o.no_distance) cfg["compute_distance"] = false;
      Json d = cfg.value("distance", Json::object());
      if (search->count("--wmax")) d["w_max"] = o.wmax;
      if (search->count("--trials")) d["trials"] = o.trials;
      if (search->count("--seed")) d["seed"] = o.seed;
      cfg["distance"] = d;
      CString s;
      Check(cg_search(cfg.dump().c_str(), o.out.c_str(), &s.p));
      Emit(o, s.p);
    } else if (*vman) {
      Json opts;
      opts["check_distance"] = !o.no_distance;
      opts["check_gates"] = !o.no_gates;
      if (!o.rows.empty()) opts["rows"] = o.rows;
      if (vman->count("--wmax") || vman->count("--trials") ||
          vman->count("--seed")) {
        opts["distance"] = {{"w_max", o.wmax}, {"trials", o.trials},
                            {"seed", o.seed}};
      }
      CString s;
      Check(cg_verify_manifest(ReadFile(o.manifest_file).c_str(),
                               opts.dump().c_str(), &s.p));
      Emit(o, s.p);
      const Json r = Json::parse(s.p);
      return r.value("failed", 0) == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "cupgates: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
