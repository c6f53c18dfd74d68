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

// Symbolic expansion of the master equations into intersection terms and
// enumeration of term pairings ("configurations").

#ifndef CUPGATES_MATCHING_HPP_
#define CUPGATES_MATCHING_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cupgates/cup.hpp"
#include "cupgates/group.hpp"

namespace cupgates {

// Zero-based support indices; slot t multiplies a_{t+1}.
struct TermTuple {
  std::array<std::uint8_t, 3> idx{};
  std::uint8_t arity = 2;
  std::string to_string() const;  // one-based digits, e.g. "341"
  bool operator==(const TermTuple&) const = default;
};

// A sum of words over {i, o, f}; one equation per a-equality pattern.
struct WordEquation {
  std::string pattern;
  std::vector<std::string> words;
};

// Word-level system actually used, with the all-equal parity equation left
// out (it is the |in| + |out| even prefilter).
std::vector<WordEquation> SimplifiedWordSystem(int lambda, CupVariant variant);
// Direct expansion of the master equation, every pattern included.
std::vector<WordEquation> RawWordSystem(int lambda, CupVariant variant);

struct EquationSpec {
  int lambda = 2;
  CupVariant variant = CupVariant::kNonAssociative;
  Signature signature;
  std::string pattern;
  std::vector<std::string> words;
  int arity = 2;
  std::vector<TermTuple> terms;
};

struct EquationSystem {
  bool parity_ok = true;
  std::string reason;
  std::vector<EquationSpec> equations;
};

// Index labeling: in-indices first, then out, then free.
EquationSystem BuildEquations(int weight, Signature signature, int lambda,
                              CupVariant variant);

struct ScreenResult {
  bool viable = true;
  std::string reason;  // "odd" or "singular-single" when rejected
};

bool IsSingular(const EquationSpec& eq, int* factored_size = nullptr);
ScreenResult Screen(const EquationSpec& eq);

// g_{lhs0}^{-1} g_{lhs1} = g_{rhs0}^{-1} g_{rhs1}, zero-based. With
// right_quotient the two sides read g_a g_b^{-1} instead.
struct Relation {
  std::array<std::uint8_t, 2> lhs{}, rhs{};
  bool right_quotient = false;
  bool operator==(const Relation&) const = default;
  auto operator<=>(const Relation&) const = default;
  std::string to_string() const;
};

struct ConditionSet {
  std::vector<Relation> relations;
  std::string source;
  // Evaluates every relation on g (zero-based indexing).
  bool holds(const FiniteGroup& group, const std::vector<Element>& g) const;
  // Sorted, each relation oriented with its smaller side first.
  ConditionSet canonical() const;
  std::vector<std::string> to_strings() const;
};

struct ClosureOptions {
  // (i,j)=(k,l) implies (j,i)=(l,k). Valid in any group.
  bool inverse_closure = true;
  // (i,j)=(k,l) implies (i,k)=(j,l). Valid in abelian groups only.
  bool abelian_closure = false;
  // A triple pair also relates its outer indices (implied, but exposes
  // contradictions to the union-find).
  bool triple_outer = true;
};

bool ConditionsConsistent(const ConditionSet& cs,
                          const ClosureOptions& opts = {});

struct TermPair {
  int equation;
  int first, second;  // term indices within the equation
};

struct Configuration {
  std::vector<TermPair> pairing;
  ConditionSet conditions;
};

struct ConfigurationOptions {
  int weight_cap = 8;
  std::uint64_t node_budget = 50'000'000;
  ClosureOptions closure;
};

struct ConfigurationResult {
  bool viable = true;
  std::string reason;
  std::vector<Configuration> configurations;
  std::uint64_t raw_matchings = 0;  // product of (m-1)!! over equations
  std::uint64_t nodes = 0;
};

ConfigurationResult EnumerateConfigurations(
    const std::vector<EquationSpec>& eqs,
    const ConfigurationOptions& opts = {});

// Parity, screening and enumeration for one signature.
ConfigurationResult ConfigurationsFor(int weight, Signature signature,
                                      int lambda, CupVariant variant,
                                      const ConfigurationOptions& opts = {});

}  // namespace cupgates

#endif  // CUPGATES_MATCHING_HPP_
