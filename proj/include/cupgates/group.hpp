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

// Finite groups given as products of cyclic groups or by Cayley table, and
// F2 group-algebra elements over them.

#ifndef CUPGATES_GROUP_HPP_
#define CUPGATES_GROUP_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cupgates {

class BitMatrix;

// Canonical element index. The identity is always 0.
using Element = std::uint32_t;

class FiniteGroup {
 public:
  enum class Kind { kAbelianProduct, kCayleyTable };

  // C_{n1} x ... x C_{nr}. Exponent vectors are mixed-radix encoded with the
  // first factor least significant.
  static std::shared_ptr<const FiniteGroup> Abelian(std::vector<int> orders);
  // Row a, column b holds the index of a*b. Index 0 must be the identity.
  static std::shared_ptr<const FiniteGroup> FromCayley(
      const std::vector<std::vector<int>>& table);

  Kind kind() const { return kind_; }
  int size() const { return size_; }
  const std::vector<int>& orders() const { return orders_; }
  bool is_abelian_product() const { return kind_ == Kind::kAbelianProduct; }
  bool is_commutative() const { return commutative_; }

  Element identity() const { return 0; }
  Element mul(Element a, Element b) const {
    return table_[static_cast<std::size_t>(a) * size_ + b];
  }
  Element inv(Element a) const { return inverse_[a]; }
  // Checked variants for external input.
  Element checked_mul(Element a, Element b) const;
  Element checked_inv(Element a) const;
  int order_of(Element a) const;

  std::vector<int> exponents(Element a) const;
  Element from_exponents(std::span<const int> exps) const;
  std::string format(Element a) const;
  // Generator names x, y, z, w, u, v, ... by factor position.
  static std::string generator_name(int i);

  bool operator==(const FiniteGroup& other) const;
  std::string description() const;

 private:
  FiniteGroup() = default;
  void finish();

  Kind kind_ = Kind::kAbelianProduct;
  int size_ = 0;
  std::vector<int> orders_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  bool commutative_ = true;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A nonzero element of F2[G], stored as its sorted support.
class GroupAlgebraElement {
 public:
  // Duplicate entries cancel in pairs. An empty result is a domain error.
  GroupAlgebraElement(GroupPtr group, std::vector<Element> terms);

  const GroupPtr& group_ptr() const { return group_; }
  const FiniteGroup& group() const { return *group_; }
  const std::vector<Element>& support() const { return support_; }
  int weight() const { return static_cast<int>(support_.size()); }
  bool contains(Element g) const;

  GroupAlgebraElement antipode() const;
  // {g*s} and {s*g} over the support.
  GroupAlgebraElement left_multiply(Element g) const;
  GroupAlgebraElement right_multiply(Element g) const;
  std::string format() const;

  bool operator==(const GroupAlgebraElement& other) const;
  bool operator<(const GroupAlgebraElement& other) const {
    return support_ < other.support_;
  }

 private:
  GroupPtr group_;
  std::vector<Element> support_;
};

// Support of a*b in F2[G]; may be empty.
std::vector<Element> AlgebraProduct(const GroupAlgebraElement& a,
                                    const GroupAlgebraElement& b);
std::vector<Element> AlgebraProduct(const FiniteGroup& group,
                                    std::span<const Element> a,
                                    std::span<const Element> b);

// Column h has ones at rows {g*h : g in support}.
BitMatrix RegularRepresentation(const GroupAlgebraElement& alpha);

// Parses "1+x^4+x^8", "x+xy^2", ... over an abelian product. Terms reduce
// mod the factor orders and cancel mod 2.
GroupAlgebraElement ParsePolynomial(GroupPtr group, const std::string& text);

struct CyclicCollapse {
  GroupPtr cyclic;
  std::vector<Element> image;  // image[g] for every g in the source group.
  GroupAlgebraElement map(const GroupAlgebraElement& alpha) const;
};

// Pairwise-coprime abelian products are cyclic; x_i maps to a^(N/n_i).
std::optional<CyclicCollapse> CoprimeCollapse(const FiniteGroup& group);

// Lexicographic stream over supports of a fixed weight.
class CheckElementStream {
 public:
  CheckElementStream(GroupPtr group, int weight, bool fix_identity);
  std::optional<GroupAlgebraElement> next();
  std::uint64_t total() const { return total_; }

 private:
  GroupPtr group_;
  int weight_;
  bool fix_identity_;
  bool done_ = false;
  std::vector<Element> current_;
  std::uint64_t total_ = 0;
};

std::vector<GroupAlgebraElement> EnumerateCheckElements(GroupPtr group,
                                                        int weight,
                                                        bool fix_identity);

// Every abelian group of the given order up to isomorphism, as products of
// prime-power cyclic groups (elementary-divisor form).
std::vector<std::vector<int>> AbelianGroupTypes(int order);

std::uint64_t Binomial(int n, int k);

}  // namespace cupgates

#endif  // CUPGATES_GROUP_HPP_
