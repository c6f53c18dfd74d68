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

#include "cupgates/gates.hpp"

#include <algorithm>
#include <unordered_map>

#include "cupgates/error.hpp"

namespace cupgates {
namespace {

void CheckOrientations(const CssCode& code,
                       std::span<const PreOrientation> orientations) {
  if (static_cast<int>(orientations.size()) != code.num_factors()) {
    ThrowDomain("need one pre-orientation per factor");
  }
  for (int t = 0; t < code.num_factors(); ++t) {
    if (!(orientations[t].element() == code.factors()[t].coboundary())) {
      ThrowDomain("pre-orientation does not label the factor coboundary");
    }
  }
}

bool InPart(const PreOrientation& po, Part p, Element g) {
  const auto& s = po.part(p);
  return std::binary_search(s.begin(), s.end(), g);
}

struct Cochain {
  int deg = 0;  // -1 marks the zero cochain
  Element g = 0;
};

// Products of basis cochains of one two-term factor.
Cochain Cup(const FiniteGroup& G, const PreOrientation& po, Cochain x,
            Cochain y) {
  if (x.deg < 0 || y.deg < 0) return {-1, 0};
  if (x.deg == 0 && y.deg == 0) return x.g == y.g ? x : Cochain{-1, 0};
  if (x.deg == 1 && y.deg == 0) {
    return InPart(po, Part::kIn, G.mul(x.g, G.inv(y.g))) ? x : Cochain{-1, 0};
  }
  if (x.deg == 0 && y.deg == 1) {
    return InPart(po, Part::kOut, G.mul(y.g, G.inv(x.g))) ? y
                                                          : Cochain{-1, 0};
  }
  return {-1, 0};
}

// Bracketed product of the cochains of one factor; true if it is a nonzero
// 1-cochain.
bool FactorNonzero(const FiniteGroup& G, const PreOrientation& po,
                   CupVariant variant, std::span<const Cochain> c) {
  int ones = 0, pos = -1;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i].deg == 1) ++ones, pos = static_cast<int>(i);
  if (ones != 1) return false;
  if (c.size() == 2) return Cup(G, po, c[0], c[1]).deg == 1;
  bool right_first = false;
  if (variant == CupVariant::kSymmetric) right_first = pos == 2;
  if (variant == CupVariant::kOutsideIn) right_first = pos == 0;
  const Cochain r = right_first
                        ? Cup(G, po, c[0], Cup(G, po, c[1], c[2]))
                        : Cup(G, po, Cup(G, po, c[0], c[1]), c[2]);
  return r.deg == 1;
}

// Representatives of a qubit's class as coordinate tuples.
std::vector<std::vector<Element>> Representatives(const CssCode& code,
                                                  std::size_t q,
                                                  bool canonical_only) {
  const QubitLabel l = code.label(q);
  const int lam = code.num_factors();
  if (code.product() == ProductKind::kHypergraph) {
    return {code.coordinates(l.index)};
  }
  const FiniteGroup& G = code.group();
  if (canonical_only) {
    std::vector<Element> c(lam, 0);
    c[l.sector] = l.index;
    return {c};
  }
  std::vector<std::vector<Element>> out;
  std::vector<Element> h(lam, 0);
  while (true) {
    Element prod = 0;
    for (int t = 0; t + 1 < lam; ++t) prod = G.mul(prod, h[t]);
    h[lam - 1] = G.mul(l.index, G.inv(prod));
    out.push_back(h);
    int t = lam - 2;
    while (t >= 0 && static_cast<int>(h[t]) == G.size() - 1) h[t--] = 0;
    if (t < 0) break;
    ++h[t];
  }
  return out;
}

void CheckSynthesisGroup(const CssCode& code) {
  if (code.product() == ProductKind::kBalanced &&
      !code.group().is_commutative()) {
    ThrowUnsupported("coinvariant sums need an abelian group");
  }
}

}  // namespace

int CupIntegralDirect(const CssCode& code,
                      std::span<const PreOrientation> orientations,
                      CupVariant variant,
                      std::span<const std::size_t> qubits) {
  CheckOrientations(code, orientations);
  CheckSynthesisGroup(code);
  const int lam = code.num_factors();
  if (static_cast<int>(qubits.size()) != lam) {
    ThrowDomain("need one qubit per copy");
  }
  for (std::size_t q : qubits)
    if (q >= code.n()) ThrowDomain("qubit index out of range");
  const FiniteGroup& G = code.group();
  std::vector<std::vector<std::vector<Element>>> reps(lam);
  std::vector<int> sector(lam);
  for (int i = 0; i < lam; ++i) {
    reps[i] = Representatives(code, qubits[i], i == 0);
    sector[i] = code.label(qubits[i]).sector;
  }
  std::vector<Cochain> cs(lam);
  auto evaluate = [&](const std::vector<const std::vector<Element>*>& pick) {
    for (int t = 0; t < lam; ++t) {
      for (int i = 0; i < lam; ++i) {
        cs[i] = {sector[i] == t ? 1 : 0, (*pick[i])[t]};
      }
      if (!FactorNonzero(G, orientations[t], variant, cs)) return 0;
    }
    return 1;
  };
  int parity = 0;
  std::vector<const std::vector<Element>*> pick(lam);
  pick[0] = &reps[0][0];
  for (const auto& r1 : reps[1]) {
    pick[1] = &r1;
    if (lam == 2) {
      parity ^= evaluate(pick);
      continue;
    }
    for (const auto& r2 : reps[2]) {
      pick[2] = &r2;
      parity ^= evaluate(pick);
    }
  }
  return parity;
}

namespace {

struct Pair {
  Element u, v;
};

// Component pairs (u, v) at one factor for which the bracketed product is a
// nonzero 1-cochain, given the first argument's component c and the position
// of the 1-cochain among the arguments.
std::vector<Pair> FactorPairs(const FiniteGroup& G, const PreOrientation& po,
                              CupVariant variant, int lambda, int pos,
                              Element c) {
  std::vector<Pair> out;
  const auto& in = po.in();
  const auto& outs = po.out();
  if (lambda == 2) {
    if (pos == 0) {
      for (Element h : in) out.push_back({G.mul(G.inv(h), c), 0});
    } else {
      for (Element o : outs) out.push_back({G.mul(o, c), 0});
    }
    return out;
  }
  if (pos == 0) {
    for (Element h : in)
      for (Element k : in) out.push_back({G.mul(G.inv(h), c), G.mul(G.inv(k), c)});
  } else if (pos == 1) {
    for (Element o : outs) {
      const Element u = G.mul(o, c);
      for (Element h : in) out.push_back({u, G.mul(G.inv(h), u)});
    }
  } else if (variant == CupVariant::kNonAssociative) {
    for (Element o : outs) out.push_back({c, G.mul(o, c)});
  } else {
    for (Element o : outs) {
      const Element v = G.mul(o, c);
      for (Element p : outs) out.push_back({G.mul(G.inv(p), v), v});
    }
  }
  return out;
}

GateCircuit Synthesize(const CssCode& code,
                       std::span<const PreOrientation> orientations,
                       CupVariant variant) {
  CheckOrientations(code, orientations);
  CheckSynthesisGroup(code);
  const FiniteGroup& G = code.group();
  const int lam = code.num_factors();
  const bool balanced = code.product() == ProductKind::kBalanced;
  GateCircuit circuit;
  circuit.arity = lam;
  circuit.n = code.n();

  std::vector<int> order(lam);
  std::vector<std::vector<Pair>> lists(lam);
  std::unordered_map<std::uint64_t, char> parity;
  const std::uint64_t m = code.sector_size();
  for (std::size_t q1 = 0; q1 < code.n(); ++q1) {
    const QubitLabel l1 = code.label(q1);
    const std::vector<Element> c = Representatives(code, q1, true)[0];
    // Sectors of the other arguments, in every order.
    std::vector<int> rest;
    for (int t = 0; t < lam; ++t)
      if (t != l1.sector) rest.push_back(t);
    do {
      order[0] = l1.sector;
      for (int i = 1; i < lam; ++i) order[i] = rest[i - 1];
      for (int i = 0; i < lam; ++i) {
        const int t = order[i];
        lists[t] = FactorPairs(G, orientations[t], variant, lam, i, c[t]);
      }
      parity.clear();
      std::vector<std::size_t> idx(lam, 0);
      bool empty = false;
      for (int t = 0; t < lam; ++t) empty = empty || lists[t].empty();
      if (empty) continue;
      std::vector<Element> us(lam), vs(lam);
      while (true) {
        for (int t = 0; t < lam; ++t) {
          us[t] = lists[t][idx[t]].u;
          vs[t] = lists[t][idx[t]].v;
        }
        std::uint64_t a, b = 0;
        if (balanced) {
          Element pu = 0, pv = 0;
          for (int t = 0; t < lam; ++t) {
            pu = G.mul(pu, us[t]);
            pv = G.mul(pv, vs[t]);
          }
          a = pu;
          b = pv;
        } else {
          a = code.encode(us);
          b = lam == 3 ? code.encode(vs) : 0;
        }
        parity[a * m + b] ^= 1;
        int t = lam - 1;
        while (t >= 0 && ++idx[t] == lists[t].size()) idx[t--] = 0;
        if (t < 0) break;
      }
      for (const auto& [key, p] : parity) {
        if (!p) continue;
        const std::uint64_t a = key / m, b = key % m;
        std::array<std::uint32_t, 3> g{};
        g[0] = static_cast<std::uint32_t>(q1);
        g[1] = static_cast<std::uint32_t>(code.qubit(order[1], a));
        if (lam == 3) {
          g[2] = static_cast<std::uint32_t>(code.qubit(order[2], b));
        }
        circuit.gates.push_back(g);
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  std::sort(circuit.gates.begin(), circuit.gates.end());
  return circuit;
}

}  // namespace

GateCircuit SynthCzCircuit(const CssCode& code,
                           std::span<const PreOrientation> orientations) {
  if (code.num_factors() != 2) ThrowDomain("CZ synthesis needs a square code");
  return Synthesize(code, orientations, CupVariant::kNonAssociative);
}

GateCircuit SynthCczCircuit(const CssCode& code,
                            std::span<const PreOrientation> orientations,
                            CupVariant variant) {
  if (code.num_factors() != 3) ThrowDomain("CCZ synthesis needs a cube code");
  if (variant == CupVariant::kOutsideIn) {
    ThrowUnsupported("no gate synthesis for the outside-in cup product");
  }
  return Synthesize(code, orientations, variant);
}

GateCircuit SynthDirect(const CssCode& code,
                        std::span<const PreOrientation> orientations,
                        CupVariant variant) {
  CheckOrientations(code, orientations);
  const int lam = code.num_factors();
  GateCircuit circuit;
  circuit.arity = lam;
  circuit.n = code.n();
  const std::size_t n = code.n();
  std::vector<std::size_t> q(lam);
  for (q[0] = 0; q[0] < n; ++q[0]) {
    for (q[1] = 0; q[1] < n; ++q[1]) {
      if (code.label(q[1]).sector == code.label(q[0]).sector) continue;
      if (lam == 2) {
        if (CupIntegralDirect(code, orientations, variant, q)) {
          circuit.gates.push_back({static_cast<std::uint32_t>(q[0]),
                                   static_cast<std::uint32_t>(q[1]), 0});
        }
        continue;
      }
      for (q[2] = 0; q[2] < n; ++q[2]) {
        const int s = code.label(q[2]).sector;
        if (s == code.label(q[0]).sector || s == code.label(q[1]).sector) {
          continue;
        }
        if (CupIntegralDirect(code, orientations, variant, q)) {
          circuit.gates.push_back({static_cast<std::uint32_t>(q[0]),
                                   static_cast<std::uint32_t>(q[1]),
                                   static_cast<std::uint32_t>(q[2])});
        }
      }
    }
  }
  return circuit;
}

bool PreservesCodespace(const CssCode& code, const GateCircuit& circuit) {
  const std::size_t n = code.n();
  const int lam = circuit.arity;
  if (circuit.n != n) ThrowDomain("circuit and code sizes differ");
  for (const auto& g : circuit.gates)
    for (int c = 0; c < lam; ++c)
      if (g[c] >= n) ThrowDomain("gate qubit out of range");
  const BitMatrix& hx = code.hx();
  const RowSpace& zspace = code.hz_space();

  if (lam == 2) {
    for (int slot = 0; slot < 2; ++slot) {
      std::vector<std::vector<std::uint32_t>> partners(n);
      for (const auto& g : circuit.gates) partners[g[slot]].push_back(g[1 - slot]);
      for (std::size_t r = 0; r < hx.rows(); ++r) {
        BitVector y(n);
        for (std::size_t i : hx.row_vector(r).ones())
          for (auto j : partners[i]) y.flip(j);
        if (!zspace.contains(y)) return false;
      }
    }
    return true;
  }
  const BitMatrix kernel = KernelBasis(code.hz());
  for (int a = 0; a < 3; ++a) {
    const int b = (a + 1) % 3, c = (a + 2) % 3;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> by(n);
    for (const auto& g : circuit.gates) by[g[a]].push_back({g[b], g[c]});
    for (std::size_t r = 0; r < hx.rows(); ++r) {
      std::vector<std::pair<std::uint32_t, std::uint32_t>> form;
      for (std::size_t i : hx.row_vector(r).ones()) {
        form.insert(form.end(), by[i].begin(), by[i].end());
      }
      if (form.empty()) continue;
      for (std::size_t x = 0; x < kernel.rows(); ++x) {
        BitVector y(n);
        for (const auto& [j, k] : form)
          if (kernel.get(x, j)) y.flip(k);
        if (!zspace.contains(y)) return false;
      }
    }
  }
  return true;
}

namespace {

std::vector<std::uint64_t> BasisMasks(const BitMatrix& basis) {
  if (basis.rows() > 64) ThrowUnsupported("more than 64 logical qubits");
  std::vector<std::uint64_t> mask(basis.cols(), 0);
  for (std::size_t r = 0; r < basis.rows(); ++r)
    for (std::size_t q : basis.row_vector(r).ones()) mask[q] |= 1ull << r;
  return mask;
}

}  // namespace

LogicalAction LogicalActionCz(const GateCircuit& circuit,
                              const BitMatrix& basis) {
  if (circuit.arity != 2) ThrowDomain("CZ logical action needs an arity-2 circuit");
  const auto mask = BasisMasks(basis);
  const std::size_t k = basis.rows();
  std::vector<char> parity(k * k, 0);
  for (const auto& g : circuit.gates) {
    for (std::uint64_t a = mask[g[0]]; a; a &= a - 1)
      for (std::uint64_t b = mask[g[1]]; b; b &= b - 1)
        parity[std::countr_zero(a) * k + std::countr_zero(b)] ^= 1;
  }
  LogicalAction out;
  for (std::size_t i = 0; i < parity.size(); ++i) {
    if (parity[i]) {
      out.nontrivial = true;
      out.witness = {static_cast<int>(i / k), static_cast<int>(i % k)};
      break;
    }
  }
  return out;
}

LogicalAction LogicalActionCcz(const GateCircuit& circuit,
                               const BitMatrix& basis) {
  if (circuit.arity != 3) ThrowDomain("CCZ logical action needs an arity-3 circuit");
  const auto mask = BasisMasks(basis);
  const std::size_t k = basis.rows();
  std::vector<char> parity(k * k * k, 0);
  for (const auto& g : circuit.gates) {
    for (std::uint64_t a = mask[g[0]]; a; a &= a - 1)
      for (std::uint64_t b = mask[g[1]]; b; b &= b - 1)
        for (std::uint64_t c = mask[g[2]]; c; c &= c - 1)
          parity[(std::countr_zero(a) * k + std::countr_zero(b)) * k +
                 std::countr_zero(c)] ^= 1;
  }
  LogicalAction out;
  for (std::size_t i = 0; i < parity.size(); ++i) {
    if (parity[i]) {
      out.nontrivial = true;
      out.witness = {static_cast<int>(i / (k * k)),
                     static_cast<int>((i / k) % k), static_cast<int>(i % k)};
      break;
    }
  }
  return out;
}

}  // namespace cupgates
