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

#include <fstream>
#include <set>
#include <string>
#include <utility>

#include "doctest.h"
#include "cupgates/manifest.hpp"

using namespace cupgates;

namespace {

Json Load(const std::string& name) {
  std::ifstream in(std::string(CUPGATES_MANIFEST_DIR) + "/" + name);
  REQUIRE(in.good());
  return Json::parse(in);
}

// (row label, check name) pairs that are expected to fail.
using Deviations = std::set<std::pair<std::string, std::string>>;

void Verify(const std::string& file, const Deviations& known) {
  const ManifestReport r = VerifyManifest(Load(file));
  CAPTURE(file);
  CHECK_FALSE(r.rows.empty());
  Deviations seen;
  for (const auto& row : r.rows) {
    for (const auto& c : row.checks) {
      if (c.pass) continue;
      CAPTURE(row.label);
      CAPTURE(c.detail);
      seen.insert({row.label, c.name});
      CHECK_MESSAGE(known.count({row.label, c.name}) == 1,
                    "unexpected failure of " << c.name);
    }
  }
  CHECK(seen == known);
}

}  // namespace

TEST_CASE("weight 3 CZ table") { Verify("weight3_cz.json", {}); }

TEST_CASE("weight 4 CZ table") { Verify("weight4_cz.json", {}); }

TEST_CASE("weight 2 cube table") { Verify("search_results2.json", {}); }

TEST_CASE("weight 4 cube table") {
  // The C4 row reduces to x+x^2, whose cube code has a logical CCZ although
  // the manifest expects trivial action on every row.
  Verify("search_results.json", {{"C4 [[12,3]]", "logical_action"}});
}

TEST_CASE("nontrivial logic table") { Verify("non_trivial_logic.json", {}); }

TEST_CASE("three-block CZ table") {
  const ManifestReport r = VerifyManifest(Load("menon_cz.json"));
  CHECK(r.ok());
  CHECK(r.passed() + r.skipped() == static_cast<int>(r.rows.size()));
}
