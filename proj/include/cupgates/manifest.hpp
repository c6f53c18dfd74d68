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

#ifndef CUPGATES_MANIFEST_HPP_
#define CUPGATES_MANIFEST_HPP_

#include <optional>
#include <string>
#include <vector>

#include "cupgates/json_io.hpp"
#include "cupgates/search.hpp"

namespace cupgates {

struct ManifestOptions {
  std::optional<DistancePolicy> distance;  // overrides the manifest block
  bool check_distance = true;
  bool check_gates = true;
  std::vector<int> rows;  // zero-based; empty means all
};

struct CheckOutcome {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct RowOutcome {
  int index = 0;
  std::string label;
  std::string status;  // "pass", "fail" or "skipped"
  std::vector<CheckOutcome> checks;
  std::vector<std::string> flags;
  Json measured;
};

struct ManifestReport {
  std::string table;
  std::vector<RowOutcome> rows;
  int passed() const;
  int failed() const;
  int skipped() const;
  bool ok() const { return failed() == 0; }
};

ManifestReport VerifyManifest(const Json& manifest,
                              const ManifestOptions& opts = {});
Json ManifestReportToJson(const ManifestReport& r);

}  // namespace cupgates

#endif  // CUPGATES_MANIFEST_HPP_
