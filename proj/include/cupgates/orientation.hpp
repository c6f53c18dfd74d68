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

// Master equations, pre-orientation checks and labeling enumeration.

#ifndef CUPGATES_ORIENTATION_HPP_
#define CUPGATES_ORIENTATION_HPP_

#include <span>
#include <string>
#include <vector>

#include "cupgates/cup.hpp"
#include "cupgates/matching.hpp"

namespace cupgates {

// Left side of the master equation mod 2 at (a_1, ..., a_lambda).
int MasterEval(const PreOrientation& po, int lambda, CupVariant variant,
               std::span<const Element> points);

// Brute force over all |G|^lambda points.
bool VerifyPreorientation(const PreOrientation& po, int lambda,
                          CupVariant variant);

enum class Theorem {
  kWeight3TwoCopy,         // g3^-1 g2 = g1^-1 g3 for (1,1,1)
  kWeight4TwoCopy,         // (1,1,2), (2,2,0), (1,3,0), (3,1,0) lists
  kWeight4NonAssociative,  // (2,2,0) involutions
  kWeight4Symmetric,       // (2,2,0), same list as two copies
  kWeight6TwoTwoTwo,       // (2,2,2) involutions with equal right quotients
};

std::string ToString(Theorem t);
Theorem ParseTheorem(const std::string& s);
int TheoremWeight(Theorem t);

struct TheoremEntry {
  Signature signature;
  std::vector<ConditionSet> disjuncts;
};

const std::vector<TheoremEntry>& TheoremConditions(Theorem t);

// True when some disjunct holds after reordering elements inside each
// partition.
bool TheoremConditionCheck(const PreOrientation& labeling, Theorem t);

enum class CheckMode { kOracle, kClosedForm };

std::string ToString(CheckMode m);
CheckMode ParseCheckMode(const std::string& s);

// Closed form: parity, screening, and some configuration's conditions.
bool ClosedFormValid(const PreOrientation& po, int lambda, CupVariant variant);

// Shared per-signature configurations, computed once.
const ConfigurationResult& CachedConfigurations(int weight, Signature sig,
                                                int lambda,
                                                CupVariant variant);

// Every labeling in lexicographic order (in < out < free per position).
std::vector<PreOrientation> AllLabelings(const GroupAlgebraElement& element,
                                         bool nontrivial_only);

std::vector<PreOrientation> EnumeratePreorientations(
    const GroupAlgebraElement& element, int lambda, CupVariant variant,
    CheckMode mode);

}  // namespace cupgates

#endif  // CUPGATES_ORIENTATION_HPP_
