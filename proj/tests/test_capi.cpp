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

#include <string>

#include "doctest.h"
#include "cupgates/cupgates.h"
#include "json.hpp"

using Json = nlohmann::json;

namespace {

Json Take(char* s) {
  REQUIRE(s != nullptr);
  Json j = Json::parse(s);
  cg_free_string(s);
  return j;
}

const char* kCube =
    R"({"group":{"orders":[9]},
        "polys":["1+x+x^3+x^4","1+x+x^6+x^7","1+x^2+x^3+x^5"]})";

}  // namespace

TEST_CASE("version and error reporting") {
  CHECK(std::string(cg_version()).size() > 0);
  cg_code* code = nullptr;
  CHECK(cg_code_build("{not json", &code) == CG_ERR_PARSE);
  CHECK(code == nullptr);
  CHECK(std::string(cg_last_error_message()).size() > 0);
  CHECK(cg_code_build(R"({"group":"9","polys":["1+x"]})", &code) ==
        CG_ERR_DOMAIN);
  CHECK(cg_code_build(R"({"group":"9","polys":["1+q","1+x"]})", &code) ==
        CG_ERR_PARSE);
  CHECK(cg_code_build(nullptr, &code) == CG_ERR_INVALID_ARGUMENT);
  CHECK(cg_code_build(kCube, nullptr) == CG_ERR_INVALID_ARGUMENT);
  size_t n = 0;
  CHECK(cg_code_params(nullptr, &n, nullptr) == CG_ERR_INVALID_ARGUMENT);
  cg_code_destroy(nullptr);
  cg_circuit_destroy(nullptr);
  cg_free_string(nullptr);
}

TEST_CASE("code lifecycle") {
  cg_code* code = nullptr;
  REQUIRE(cg_code_build(kCube, &code) == CG_OK);
  CHECK(std::string(cg_last_error_message()).empty());
  size_t n = 0, k = 0;
  CHECK(cg_code_params(code, &n, &k) == CG_OK);
  CHECK(n == 27);
  CHECK(k == 9);
  char* s = nullptr;
  REQUIRE(cg_code_report(code, &s) == CG_OK);
  const Json rep = Take(s);
  CHECK(rep["shape"] == "cube");
  CHECK(rep["x_check_weights"] == Json::array({12}));
  REQUIRE(cg_code_matrices(code, &s) == CG_OK);
  const Json m = Take(s);
  CHECK(m["hx"].size() == 9);
  CHECK(m["logicals"].size() == 9);
  CHECK(m["hz"][0].get<std::string>().size() == 27);
  REQUIRE(cg_code_distance(code, R"({"w_max":3})", &s) == CG_OK);
  const Json d = Take(s);
  CHECK(d["d_exact"] == 2);
  REQUIRE(cg_code_distance(code, R"({"method":"randomized","trials":200})",
                           &s) == CG_OK);
  CHECK(Take(s)["d_upper"].get<int>() >= 2);
  CHECK(cg_code_distance(code, R"({"method":"guess"})", &s) == CG_ERR_PARSE);
  cg_code_destroy(code);
}

TEST_CASE("circuits through the C interface") {
  cg_code* code = nullptr;
  REQUIRE(cg_code_build(kCube, &code) == CG_OK);
  cg_circuit* c = nullptr;
  REQUIRE(cg_circuit_synthesize(
              code, R"({"variant":"symmetric","select":"nontrivial"})", &c) ==
          CG_OK);
  size_t gates = 0;
  CHECK(cg_circuit_gate_count(c, &gates) == CG_OK);
  CHECK(gates > 0);
  char* s = nullptr;
  REQUIRE(cg_circuit_verify(code, c, &s) == CG_OK);
  const Json v = Take(s);
  CHECK(v["preserves"] == true);
  CHECK(v["nontrivial"] == true);

  REQUIRE(cg_circuit_json(c, &s) == CG_OK);
  const std::string text = s;
  cg_free_string(s);
  cg_circuit* back = nullptr;
  REQUIRE(cg_circuit_parse(code, text.c_str(), &back) == CG_OK);
  size_t gates2 = 0;
  cg_circuit_gate_count(back, &gates2);
  CHECK(gates2 == gates);
  cg_circuit_destroy(back);
  cg_circuit_destroy(c);

  CHECK(cg_circuit_synthesize(code, R"({"labelings":["IIOO"]})", &c) ==
        CG_ERR_DOMAIN);
  CHECK(cg_circuit_synthesize(code, R"({"select":"best"})", &c) ==
        CG_ERR_PARSE);
  cg_code_destroy(code);
}

TEST_CASE("orientation and configuration queries") {
  char* s = nullptr;
  REQUIRE(cg_orient(R"({"group":"8","element":"1+x+x^2","lambda":2})", &s) ==
          CG_OK);
  const Json o = Take(s);
  CHECK(o["count"] == 2);
  CHECK(o["labelings"][0]["labels"] == "IFO");
  REQUIRE(cg_configs(R"({"weight":4,"signature":[1,1,2],"lambda":2})", &s) ==
          CG_OK);
  const Json c = Take(s);
  CHECK(c["raw_matchings"] == 3);
  CHECK(c["valid"] == 2);
  CHECK(cg_configs(R"({"weight":4,"signature":[1,1,1]})", &s) == CG_ERR_DOMAIN);
  CHECK(cg_orient(R"({"group":"8","element":"1+x","lambda":5})", &s) ==
        CG_ERR_UNSUPPORTED);
}

TEST_CASE("search and manifests through the C interface") {
  char* s = nullptr;
  REQUIRE(cg_search(R"({"groups":["4"],"weight":2,"lambda":2,
                        "distance":{"trials":50}})",
                    "json", &s) == CG_OK);
  const Json r = Take(s);
  CHECK(r["results"].size() >= 1);
  REQUIRE(cg_search(R"({"groups":["4"],"weight":2,"compute_distance":false})",
                    "csv", &s) == CG_OK);
  CHECK(std::string(s).rfind("group,", 0) == 0);
  cg_free_string(s);
  CHECK(cg_search(R"({"groups":["4"]})", "xml", &s) == CG_ERR_PARSE);

  const char* manifest = R"({"table":"t","lambda":3,"variant":"symmetric",
      "nontrivial":true,"rows":[{"group":"2","polys":["1+x","1+x","1+x"],
      "n":6,"k":3,"d":2},{"skip":"demo","n":1}]})";
  REQUIRE(cg_verify_manifest(manifest, nullptr, &s) == CG_OK);
  const Json m = Take(s);
  CHECK(m["passed"] == 1);
  CHECK(m["failed"] == 0);
  CHECK(m["skipped"] == 1);
}
