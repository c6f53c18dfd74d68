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

// Square and cube product complexes of two-term group-algebra complexes and
// the CSS codes read off at grading 1.

#ifndef CUPGATES_COMPLEXES_HPP_
#define CUPGATES_COMPLEXES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cupgates/bitmatrix.hpp"
#include "cupgates/group.hpp"

namespace cupgates {

// R --delta--> R with R = F2[G]. The check element is the antipode of delta.
class TwoTermComplex {
 public:
  static TwoTermComplex FromCoboundary(GroupAlgebraElement delta) {
    return TwoTermComplex(std::move(delta));
  }
  static TwoTermComplex FromCheck(const GroupAlgebraElement& alpha) {
    return TwoTermComplex(alpha.antipode());
  }
  const GroupAlgebraElement& coboundary() const { return delta_; }
  GroupAlgebraElement check() const { return delta_.antipode(); }

 private:
  explicit TwoTermComplex(GroupAlgebraElement delta)
      : delta_(std::move(delta)) {}
  GroupAlgebraElement delta_;
};

enum class ProductKind { kBalanced, kHypergraph };

std::string ToString(ProductKind kind);
ProductKind ParseProductKind(const std::string& s);

struct QubitLabel {
  int sector;          // factor carrying the 1-cochain
  std::uint32_t index;  // group element (balanced) or encoded tuple
};

class CssCode {
 public:
  // Two factors give the square complex, three the cube complex.
  CssCode(std::vector<TwoTermComplex> factors, ProductKind kind);

  const BitMatrix& hx() const { return hx_; }
  const BitMatrix& hz() const { return hz_; }
  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  int num_factors() const { return static_cast<int>(factors_.size()); }
  ProductKind product() const { return kind_; }
  std::string shape() const { return num_factors() == 2 ? "square" : "cube"; }
  const std::vector<TwoTermComplex>& factors() const { return factors_; }
  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }

  // Cells per sector: |G| for balanced, |G|^L for hypergraph.
  std::size_t sector_size() const { return sector_size_; }
  QubitLabel label(std::size_t q) const {
    return {static_cast<int>(q / sector_size_),
            static_cast<std::uint32_t>(q % sector_size_)};
  }
  std::size_t qubit(int sector, std::uint32_t index) const {
    return static_cast<std::size_t>(sector) * sector_size_ + index;
  }
  // Hypergraph cells decode to one group element per factor.
  std::vector<Element> coordinates(std::uint32_t index) const;
  std::uint32_t encode(const std::vector<Element>& coords) const;

  // Grading-2 cells, as factor pairs, in row-block order of hz.
  const std::vector<std::pair<int, int>>& grading2_blocks() const {
    return blocks2_;
  }

  const RowSpace& hx_space() const { return hx_space_; }
  const RowSpace& hz_space() const { return hz_space_; }

 private:
  std::vector<TwoTermComplex> factors_;
  ProductKind kind_;
  GroupPtr group_;
  std::size_t sector_size_ = 0, n_ = 0, k_ = 0;
  std::vector<std::pair<int, int>> blocks2_;
  BitMatrix hx_, hz_;
  RowSpace hx_space_, hz_space_;
};

CssCode BuildProductCode(std::vector<TwoTermComplex> factors, ProductKind kind);

// k rows: X-logical representatives reduced modulo rowspace(hx).
BitMatrix CohomologyBasis(const CssCode& code);
// Z-logical representatives reduced modulo rowspace(hz).
BitMatrix HomologyBasis(const CssCode& code);

// X side: v with hz v = 0 outside rowspace(hx). Z side swaps roles.
enum class Side { kX, kZ };

struct ExactDistanceOptions {
  int w_max = 6;
  std::uint64_t ceiling = 200'000'000;
  bool use_symmetry = true;  // translation orbits of the group action
  unsigned threads = 0;      // 0 picks hardware concurrency
};

// Candidate vectors examined at exactly weight w on one side.
std::uint64_t CandidateCount(const CssCode& code, int w, bool use_symmetry);

// Minimum logical weight on one side if it is at most w_max.
std::optional<int> ExactSideDistance(const CssCode& code, Side side,
                                     const ExactDistanceOptions& opts);
// min over both sides, searching weights in increasing order.
std::optional<int> DistanceExactByWeight(const CssCode& code,
                                         const ExactDistanceOptions& opts);

// Weight-by-weight scan that stops before the first weight whose candidate
// count exceeds the ceiling. No logical of weight <= excluded_through exists.
struct WeightScan {
  std::optional<int> found;
  int excluded_through = 0;
};

WeightScan ScanLowWeight(const CssCode& code, Side side,
                         const ExactDistanceOptions& opts);

struct RandomizedDistance {
  int dx = 0;
  int dz = 0;
  int d() const { return dx < dz ? dx : dz; }
};

RandomizedDistance DistanceUpperRandomized(const CssCode& code, int trials,
                                           std::uint64_t seed,
                                           unsigned threads = 0);
int DistanceUpperRandomizedSide(const CssCode& code, Side side, int trials,
                                std::uint64_t seed, unsigned threads = 0);

}  // namespace cupgates

#endif  // CUPGATES_COMPLEXES_HPP_
