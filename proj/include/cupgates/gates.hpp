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

// Copy-cup CZ and CCZ circuits on square and cube codes.

#ifndef CUPGATES_GATES_HPP_
#define CUPGATES_GATES_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "cupgates/complexes.hpp"
#include "cupgates/cup.hpp"

namespace cupgates {

// gates[g][c] is the qubit of copy c; entries beyond arity are unused.
struct GateCircuit {
  int arity = 2;
  std::size_t n = 0;
  std::vector<std::array<std::uint32_t, 3>> gates;
  bool operator==(const GateCircuit&) const = default;
};

// Integral of the cup product of the basis 1-cochains on the given qubits
// (one per copy), expanding every coinvariant representative.
int CupIntegralDirect(const CssCode& code,
                      std::span<const PreOrientation> orientations,
                      CupVariant variant, std::span<const std::size_t> qubits);

GateCircuit SynthCzCircuit(const CssCode& code,
                           std::span<const PreOrientation> orientations);
GateCircuit SynthCczCircuit(const CssCode& code,
                            std::span<const PreOrientation> orientations,
                            CupVariant variant);
// Every qubit tuple evaluated with CupIntegralDirect. Small codes only.
GateCircuit SynthDirect(const CssCode& code,
                        std::span<const PreOrientation> orientations,
                        CupVariant variant);

bool PreservesCodespace(const CssCode& code, const GateCircuit& circuit);

struct LogicalAction {
  bool nontrivial = false;
  std::vector<int> witness;  // basis rows with odd overlap
};

LogicalAction LogicalActionCz(const GateCircuit& circuit,
                              const BitMatrix& basis);
LogicalAction LogicalActionCcz(const GateCircuit& circuit,
                               const BitMatrix& basis);

}  // namespace cupgates

#endif  // CUPGATES_GATES_HPP_
