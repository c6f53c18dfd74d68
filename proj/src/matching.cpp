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

#include "cupgates/matching.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "cupgates/error.hpp"

namespace cupgates {
namespace {

// Set partitions of {0..n-1}; block[i] is the block of slot i, numbered by
// first appearance.
void SetPartitions(int n, std::vector<int>& cur, int blocks,
                   std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int b = 0; b <= blocks; ++b) {
    cur.push_back(b);
    SetPartitions(n, cur, std::max(blocks, b + 1), out);
    cur.pop_back();
  }
}

std::string PatternName(const std::vector<int>& block) {
  const int n = static_cast<int>(block.size());
  const int nb = *std::max_element(block.begin(), block.end()) + 1;
  auto a = [](int i) { return "a" + std::to_string(i + 1); };
  if (nb == n) return "distinct";
  if (nb == 1) {
    std::string s = a(0);
    for (int i = 1; i < n; ++i) s += "=" + a(i);
    return s;
  }
  // Exactly one merged pair when n = 3.
  int p = -1, q = -1, r = -1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (block[i] == block[j]) p = i, q = j;
  for (int i = 0; i < n; ++i)
    if (i != p && i != q) r = i;
  if (r < p) return a(r) + "!=" + a(p) + "=" + a(q);
  return a(p) + "=" + a(q) + "!=" + a(r);
}

int LetterPart(char c) {
  switch (c) {
    case 'i': return 0;
    case 'o': return 1;
    case 'f': return 2;
  }
  ThrowDomain(std::string("bad word letter ") + c);
}

std::uint64_t DoubleFactorialOdd(std::size_t m) {
  // (m-1)!! for even m, saturating.
  std::uint64_t r = 1;
  for (std::size_t k = m; k >= 2; k -= 2) {
    const std::uint64_t f = k - 1;
    if (r > UINT64_MAX / std::max<std::uint64_t>(f, 1)) return UINT64_MAX;
    r *= std::max<std::uint64_t>(f, 1);
  }
  return r;
}

// Union-find over pair symbols (i,j) with an undo log. Every merge is closed
// under the enabled derivation rules through a worklist.
class SymbolUnion {
 public:
  SymbolUnion(int w, const ClosureOptions& opts)
      : w_(w), opts_(opts), parent_(w * w), first_(w * w), second_(w * w),
        members_(w * w) {
    for (int i = 0; i < w; ++i)
      for (int j = 0; j < w; ++j) {
        const int s = i * w + j;
        parent_[s] = s;
        first_[s] = 1u << i;
        second_[s] = 1u << j;
        members_[s] = {s};
      }
  }

  std::size_t mark() const { return log_.size(); }

  void undo(std::size_t mark) {
    while (log_.size() > mark) {
      const Entry e = log_.back();
      log_.pop_back();
      parent_[e.child] = e.child;
      members_[e.root].resize(e.root_members);
      first_[e.root] = e.first;
      second_[e.root] = e.second;
    }
  }

  // (i,j) ~ (k,l) plus everything the rules derive from it.
  bool relate(int i, int j, int k, int l) {
    std::vector<std::array<int, 4>> work = {{i, j, k, l}};
    while (!work.empty()) {
      const auto [a, b, c, d] = work.back();
      work.pop_back();
      if (a == b || c == d) {
        if ((a == b) != (c == d)) return false;
        continue;
      }
      int ra = find(a * w_ + b), rb = find(c * w_ + d);
      if (ra == rb) continue;
      if ((first_[ra] & first_[rb]) || (second_[ra] & second_[rb])) {
        return false;
      }
      // Rules fire on every cross pair of the two classes.
      for (int x : members_[ra]) {
        for (int y : members_[rb]) {
          const int p = x / w_, q = x % w_, r = y / w_, t = y % w_;
          if (opts_.inverse_closure) work.push_back({q, p, t, r});
          if (opts_.abelian_closure) work.push_back({p, r, q, t});
        }
      }
      if (members_[ra].size() < members_[rb].size()) std::swap(ra, rb);
      log_.push_back({rb, ra, members_[ra].size(), first_[ra], second_[ra]});
      parent_[rb] = ra;
      members_[ra].insert(members_[ra].end(), members_[rb].begin(),
                          members_[rb].end());
      first_[ra] |= first_[rb];
      second_[ra] |= second_[rb];
    }
    return true;
  }

  // Both relations of a triple pair, and optionally the outer one.
  bool relate_triple(const TermTuple& a, const TermTuple& b) {
    if (!relate(a.idx[0], a.idx[1], b.idx[0], b.idx[1])) return false;
    if (!relate(a.idx[1], a.idx[2], b.idx[1], b.idx[2])) return false;
    if (opts_.triple_outer &&
        !relate(a.idx[0], a.idx[2], b.idx[0], b.idx[2])) {
      return false;
    }
    return true;
  }

 private:
  struct Entry {
    int child, root;
    std::size_t root_members;
    std::uint32_t first, second;
  };
  int find(int s) const {
    while (parent_[s] != s) s = parent_[s];
    return s;
  }

  int w_;
  ClosureOptions opts_;
  std::vector<int> parent_;
  std::vector<std::uint32_t> first_, second_;
  std::vector<std::vector<int>> members_;
  std::vector<Entry> log_;
};

void AppendPairRelations(const TermTuple& a, const TermTuple& b,
                         std::vector<Relation>& out) {
  out.push_back({{a.idx[0], a.idx[1]}, {b.idx[0], b.idx[1]}, false});
  if (a.arity == 3) {
    out.push_back({{a.idx[1], a.idx[2]}, {b.idx[1], b.idx[2]}, false});
  }
}

}  // namespace

std::string TermTuple::to_string() const {
  std::string s;
  for (int t = 0; t < arity; ++t) s += std::to_string(idx[t] + 1);
  return s;
}

std::vector<WordEquation> RawWordSystem(int lambda, CupVariant variant) {
  if (lambda != 2 && lambda != 3) ThrowUnsupported("lambda must be 2 or 3");
  std::vector<std::vector<int>> patterns;
  std::vector<int> cur;
  SetPartitions(lambda, cur, 0, patterns);
  std::vector<WordEquation> out;
  const std::string letters = "iof";
  for (const auto& block : patterns) {
    std::map<std::string, int> parity;
    for (int j = 0; j < lambda; ++j) {
      // Slots required to share one a-value by the bracketing.
      std::vector<std::vector<int>> tied;
      if (variant != CupVariant::kSymmetric && j >= 2) {
        std::vector<int> g;
        for (int i = 0; i < j; ++i) g.push_back(i);
        tied.push_back(g);
      }
      if (variant == CupVariant::kOutsideIn && lambda - j - 1 >= 2) {
        std::vector<int> g;
        for (int k = j + 1; k < lambda; ++k) g.push_back(k);
        tied.push_back(g);
      }
      bool ok = true;
      for (const auto& g : tied)
        for (int s : g)
          if (block[s] != block[g[0]]) ok = false;
      if (!ok) continue;
      for (char c : letters) {
        std::string w(lambda, 'o');
        for (int k = j + 1; k < lambda; ++k) w[k] = 'i';
        w[j] = c;
        const int nb = *std::max_element(block.begin(), block.end()) + 1;
        std::string reduced(nb, '?');
        bool zero = false;
        for (int s = 0; s < lambda; ++s) {
          char& r = reduced[block[s]];
          if (r == '?') r = w[s];
          else if (r != w[s]) zero = true;
        }
        if (!zero) parity[reduced] ^= 1;
      }
    }
    WordEquation eq;
    eq.pattern = PatternName(block);
    for (const auto& [w, p] : parity)
      if (p) eq.words.push_back(w);
    out.push_back(eq);
  }
  return out;
}

std::vector<WordEquation> SimplifiedWordSystem(int lambda,
                                               CupVariant variant) {
  if (lambda == 2) return {{"distinct", {"ii", "fi", "oo", "of"}}};
  if (lambda != 3) ThrowUnsupported("lambda must be 2 or 3");
  switch (variant) {
    case CupVariant::kNonAssociative:
      return {{"a1=a2!=a3", {"oo", "of"}},
              {"a1!=a2=a3", {"fi"}},
              {"a1=a3!=a2", {"ii"}},
              {"distinct", {"iii", "fii", "ooi", "ofi"}}};
    case CupVariant::kSymmetric:
      return {{"a1=a2!=a3", {"of"}},
              {"a1!=a2=a3", {"fi"}},
              {"a1=a3!=a2", {"ii", "oo"}},
              {"distinct", {"iii", "fii", "ofi", "ooo", "oof"}}};
    case CupVariant::kOutsideIn:
      return {{"a1=a2!=a3", {"oo", "of"}},
              {"a1!=a2=a3", {"ii", "fi"}},
              {"distinct", {"oii", "ooi", "ofi"}}};
  }
  ThrowUnsupported("unknown variant");
}

EquationSystem BuildEquations(int weight, Signature sig, int lambda,
                              CupVariant variant) {
  if (sig.in < 0 || sig.out < 0 || sig.free < 0 || sig.weight() != weight) {
    ThrowDomain("signature does not sum to the weight");
  }
  if (weight > 16) ThrowDomain("weight too large for symbolic expansion");
  EquationSystem sys;
  if ((sig.in + sig.out) % 2 != 0) {
    sys.parity_ok = false;
    sys.reason = "parity";
    return sys;
  }
  std::array<std::vector<std::uint8_t>, 3> part;
  int next = 0;
  for (int i = 0; i < sig.in; ++i) part[0].push_back(next++);
  for (int i = 0; i < sig.out; ++i) part[1].push_back(next++);
  for (int i = 0; i < sig.free; ++i) part[2].push_back(next++);

  for (const auto& we : SimplifiedWordSystem(lambda, variant)) {
    EquationSpec eq;
    eq.lambda = lambda;
    eq.variant = variant;
    eq.signature = sig;
    eq.pattern = we.pattern;
    eq.words = we.words;
    eq.arity = static_cast<int>(we.words.front().size());
    for (const auto& w : we.words) {
      const auto& p0 = part[LetterPart(w[0])];
      const auto& p1 = part[LetterPart(w[1])];
      for (auto x : p0)
        for (auto y : p1) {
          if (x == y) continue;
          if (eq.arity == 2) {
            eq.terms.push_back({{x, y, 0}, 2});
            continue;
          }
          for (auto z : part[LetterPart(w[2])]) {
            if (z == x || z == y) continue;
            eq.terms.push_back({{x, y, z}, 3});
          }
        }
    }
    sys.equations.push_back(std::move(eq));
  }
  return sys;
}

bool IsSingular(const EquationSpec& eq, int* factored_size) {
  // Only words that expand to at least one term take part.
  auto size_of = [&](char c) {
    switch (c) {
      case 'i': return eq.signature.in;
      case 'o': return eq.signature.out;
      default: return eq.signature.free;
    }
  };
  std::vector<std::string> live;
  for (const auto& w : eq.words) {
    // Count index tuples with distinct entries.
    std::map<char, int> used;
    long long count = 1;
    for (char c : w) {
      count *= std::max(0, size_of(c) - used[c]);
      ++used[c];
    }
    if (count > 0) live.push_back(w);
  }
  if (live.empty()) return false;
  if (live.size() == 1) {
    const std::string& w = live[0];
    for (std::size_t a = 0; a < w.size(); ++a)
      for (std::size_t b = a + 1; b < w.size(); ++b)
        if (w[a] == w[b]) return false;
  }
  const std::size_t last = live[0].size() - 1;
  for (std::size_t slot : {std::size_t{0}, last}) {
    const char c = live[0][slot];
    bool shared = true;
    for (const auto& w : live) shared = shared && w[slot] == c;
    if (shared) {
      if (factored_size) *factored_size = size_of(c);
      return true;
    }
  }
  return false;
}

ScreenResult Screen(const EquationSpec& eq) {
  if (eq.terms.size() % 2 == 1) return {false, "odd"};
  int factored = 0;
  if (!eq.terms.empty() && IsSingular(eq, &factored) && factored == 1) {
    return {false, "singular-single"};
  }
  return {true, ""};
}

std::string Relation::to_string() const {
  auto g = [](int i) { return "g_" + std::to_string(i + 1); };
  if (right_quotient) {
    return g(lhs[0]) + " " + g(lhs[1]) + "^-1 = " + g(rhs[0]) + " " +
           g(rhs[1]) + "^-1";
  }
  return g(lhs[0]) + "^-1 " + g(lhs[1]) + " = " + g(rhs[0]) + "^-1 " +
         g(rhs[1]);
}

bool ConditionSet::holds(const FiniteGroup& group,
                         const std::vector<Element>& g) const {
  auto side = [&](const std::array<std::uint8_t, 2>& s, bool right) {
    const Element a = g.at(s[0]), b = g.at(s[1]);
    return right ? group.mul(a, group.inv(b)) : group.mul(group.inv(a), b);
  };
  for (const auto& r : relations) {
    if (side(r.lhs, r.right_quotient) != side(r.rhs, r.right_quotient)) {
      return false;
    }
  }
  return true;
}

ConditionSet ConditionSet::canonical() const {
  ConditionSet c;
  c.source = source;
  for (Relation r : relations) {
    if (r.rhs < r.lhs) std::swap(r.lhs, r.rhs);
    c.relations.push_back(r);
  }
  std::sort(c.relations.begin(), c.relations.end());
  c.relations.erase(std::unique(c.relations.begin(), c.relations.end()),
                    c.relations.end());
  return c;
}

std::vector<std::string> ConditionSet::to_strings() const {
  std::vector<std::string> out;
  for (const auto& r : relations) out.push_back(r.to_string());
  return out;
}

bool ConditionsConsistent(const ConditionSet& cs, const ClosureOptions& opts) {
  int w = 0;
  for (const auto& r : cs.relations)
    for (int v : {r.lhs[0], r.lhs[1], r.rhs[0], r.rhs[1]}) w = std::max(w, v + 1);
  if (w == 0) return true;
  if (w > 32) ThrowDomain("too many indices for consistency check");
  SymbolUnion uf(w, opts);
  for (const auto& r : cs.relations) {
    // A right quotient g_a g_b^-1 is read as (b,a); exact in abelian groups.
    const auto l = r.right_quotient ? std::array<std::uint8_t, 2>{r.lhs[1], r.lhs[0]} : r.lhs;
    const auto h = r.right_quotient ? std::array<std::uint8_t, 2>{r.rhs[1], r.rhs[0]} : r.rhs;
    if (!uf.relate(l[0], l[1], h[0], h[1])) return false;
  }
  return true;
}

ConfigurationResult EnumerateConfigurations(const std::vector<EquationSpec>& eqs,
                                            const ConfigurationOptions& opts) {
  ConfigurationResult res;
  int weight = 0;
  for (const auto& eq : eqs) {
    weight = std::max(weight, eq.signature.weight());
    const ScreenResult s = Screen(eq);
    if (!s.viable) {
      res.viable = false;
      res.reason = eq.pattern + ": " + s.reason;
      return res;
    }
  }
  if (weight > opts.weight_cap) {
    ThrowBudget("weight " + std::to_string(weight) + " above the cap of " +
                std::to_string(opts.weight_cap));
  }
  res.raw_matchings = 1;
  for (const auto& eq : eqs) {
    const std::uint64_t m = DoubleFactorialOdd(eq.terms.size());
    res.raw_matchings = (m && res.raw_matchings > UINT64_MAX / m)
                            ? UINT64_MAX
                            : res.raw_matchings * m;
  }
  SymbolUnion uf(std::max(weight, 1), opts.closure);
  std::vector<std::vector<char>> paired(eqs.size());
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    paired[e].assign(eqs[e].terms.size(), 0);
  }
  std::vector<TermPair> stack;

  std::function<void(std::size_t)> dfs = [&](std::size_t e) {
    if (++res.nodes > opts.node_budget) {
      ThrowBudget("configuration enumeration exceeded its node budget");
    }
    while (e < eqs.size() &&
           std::all_of(paired[e].begin(), paired[e].end(),
                       [](char c) { return c != 0; })) {
      ++e;
    }
    if (e == eqs.size()) {
      Configuration cfg;
      cfg.pairing = stack;
      for (const auto& p : stack) {
        AppendPairRelations(eqs[p.equation].terms[p.first],
                            eqs[p.equation].terms[p.second],
                            cfg.conditions.relations);
      }
      cfg.conditions.source =
          "configuration " + std::to_string(res.configurations.size() + 1);
      res.configurations.push_back(std::move(cfg));
      return;
    }
    const auto& terms = eqs[e].terms;
    const int t = static_cast<int>(
        std::find(paired[e].begin(), paired[e].end(), 0) - paired[e].begin());
    paired[e][t] = 1;
    for (int u = t + 1; u < static_cast<int>(terms.size()); ++u) {
      if (paired[e][u]) continue;
      const std::size_t mark = uf.mark();
      const TermTuple& a = terms[t];
      const TermTuple& b = terms[u];
      const bool ok = a.arity == 3
                          ? uf.relate_triple(a, b)
                          : uf.relate(a.idx[0], a.idx[1], b.idx[0], b.idx[1]);
      if (ok) {
        paired[e][u] = 1;
        stack.push_back({static_cast<int>(e), t, u});
        dfs(e);
        stack.pop_back();
        paired[e][u] = 0;
      }
      uf.undo(mark);
    }
    paired[e][t] = 0;
  };
  dfs(0);
  return res;
}

ConfigurationResult ConfigurationsFor(int weight, Signature signature,
                                      int lambda, CupVariant variant,
                                      const ConfigurationOptions& opts) {
  const EquationSystem sys = BuildEquations(weight, signature, lambda, variant);
  if (!sys.parity_ok) {
    ConfigurationResult r;
    r.viable = false;
    r.reason = sys.reason;
    return r;
  }
  return EnumerateConfigurations(sys.equations, opts);
}

}  // namespace cupgates
