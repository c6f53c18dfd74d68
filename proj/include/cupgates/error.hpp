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

#ifndef CUPGATES_ERROR_HPP_
#define CUPGATES_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace cupgates {

enum class ErrorCode {
  kInvalidArgument = 1,
  kDomain = 2,
  kUnsupported = 3,
  kBudget = 4,
  kParse = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void ThrowDomain(const std::string& what) {
  throw Error(ErrorCode::kDomain, what);
}
[[noreturn]] inline void ThrowUnsupported(const std::string& what) {
  throw Error(ErrorCode::kUnsupported, what);
}
[[noreturn]] inline void ThrowBudget(const std::string& what) {
  throw Error(ErrorCode::kBudget, what);
}
[[noreturn]] inline void ThrowParse(const std::string& what) {
  throw Error(ErrorCode::kParse, what);
}

}  // namespace cupgates

#endif  // CUPGATES_ERROR_HPP_
