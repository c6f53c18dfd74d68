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

// Cup-product variants and pre-orientations of a coboundary's support.

#ifndef CUPGATES_CUP_HPP_
#define CUPGATES_CUP_HPP_

#include <array>
#include <string>
#include <vector>

#include "cupgates/group.hpp"

namespace cupgates {

enum class CupVariant { kNonAssociative, kSymmetric, kOutsideIn };

std::string ToString(CupVariant v);
CupVariant ParseCupVariant(const std::string& s);

enum class Part : unsigned char { kIn = 0, kOut = 1, kFree = 2 };

struct Signature {
  int in = 0, out = 0, free = 0;
  int weight() const { return in + out + free; }
  bool operator==(const Signature&) const = default;
  auto operator<=>(const Signature&) const = default;
  std::string to_string() const;
};

class PreOrientation {
 public:
  // labels[i] labels the i-th support element (sorted order).
  PreOrientation(GroupAlgebraElement element, std::vector<Part> labels);
  static PreOrientation FromSets(GroupAlgebraElement element,
                                 const std::vector<Element>& in,
                                 const std::vector<Element>& out);

  const GroupAlgebraElement& element() const { return element_; }
  const std::vector<Part>& labels() const { return labels_; }
  const std::vector<Element>& part(Part p) const {
    return parts_[static_cast<int>(p)];
  }
  const std::vector<Element>& in() const { return part(Part::kIn); }
  const std::vector<Element>& out() const { return part(Part::kOut); }
  const std::vector<Element>& free() const { return part(Part::kFree); }
  Signature signature() const;
  bool nontrivial() const { return !in().empty() && !out().empty(); }
  // Elements ordered in-set, out-set, free-set; index i is g_{i+1}.
  std::vector<Element> indexed() const;
  std::string labels_string() const;  // e.g. "IOFF"

 private:
  GroupAlgebraElement element_;
  std::vector<Part> labels_;
  std::array<std::vector<Element>, 3> parts_;
};

PreOrientation ParseLabels(const GroupAlgebraElement& element,
                           const std::string& labels);

}  // namespace cupgates

#endif  // CUPGATES_CUP_HPP_
