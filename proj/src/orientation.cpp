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

#include "cupgates/orientation.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "cupgates/bitmatrix.hpp"
#include "cupgates/error.hpp"

namespace cupgates {

std::string ToString(CupVariant v) {
  switch (v) {
    case CupVariant::kNonAssociative: return "non_associative";
    case CupVariant::kSymmetric: return "symmetric";
    case CupVariant::kOutsideIn: return "outside_in";
  }
  return "?";
}

CupVariant ParseCupVariant(const std::string& s) {
  if (s == "non_associative" || s == "non-associative") {
    return CupVariant::kNonAssociative;
  }
  if (s == "symmetric") return CupVariant::kSymmetric;
  if (s == "outside_in" || s == "outside-in") return CupVariant::kOutsideIn;
  ThrowParse("unknown cup variant '" + s + "'");
}

std::string Signature::to_string() const {
  return "(" + std::to_string(in) + "," + std::to_string(out) + "," +
         std::to_string(free) + ")";
}

PreOrientation::PreOrientation(GroupAlgebraElement element,
                               std::vector<Part> labels)
    : element_(std::move(element)), labels_(std::move(labels)) {
  if (static_cast<int>(labels_.size()) != element_.weight()) {
    ThrowDomain("one label per support element is required");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    parts_[static_cast<int>(labels_[i])].push_back(element_.support()[i]);
  }
}

PreOrientation PreOrientation::FromSets(GroupAlgebraElement element,
                                        const std::vector<Element>& in,
                                        const std::vector<Element>& out) {
  std::vector<Part> labels(element.weight(), Part::kFree);
  auto place = [&](const std::vector<Element>& set, Part p) {
    for (Element g : set) {
      const auto& sup = element.support();
      auto it = std::lower_bound(sup.begin(), sup.end(), g);
      if (it == sup.end() || *it != g) {
        ThrowDomain("labeled element is not in the support");
      }
      auto& l = labels[it - sup.begin()];
      if (l != Part::kFree) ThrowDomain("in and out sets overlap");
      l = p;
    }
  };
  place(in, Part::kIn);
  place(out, Part::kOut);
  return PreOrientation(std::move(element), std::move(labels));
}

Signature PreOrientation::signature() const {
  return {static_cast<int>(in().size()), static_cast<int>(out().size()),
          static_cast<int>(free().size())};
}

std::vector<Element> PreOrientation::indexed() const {
  std::vector<Element> g = in();
  g.insert(g.end(), out().begin(), out().end());
  g.insert(g.end(), free().begin(), free().end());
  return g;
}

std::string PreOrientation::labels_string() const {
  std::string s;
  for (Part p : labels_) s += "IOF"[static_cast<int>(p)];
  return s;
}

PreOrientation ParseLabels(const GroupAlgebraElement& element,
                           const std::string& labels) {
  std::vector<Part> parts;
  for (char c : labels) {
    switch (c) {
      case 'I': case 'i': parts.push_back(Part::kIn); break;
      case 'O': case 'o': parts.push_back(Part::kOut); break;
      case 'F': case 'f': parts.push_back(Part::kFree); break;
      default: ThrowParse(std::string("bad labeling letter ") + c);
    }
  }
  return PreOrientation(element, std::move(parts));
}

namespace {

// Bitsets of X*a for each partition X (and the whole support) and each a.
class Translates {
 public:
  explicit Translates(const PreOrientation& po)
      : group_(po.element().group()), n_(group_.size()),
        stride_(WordsFor(n_)) {
    data_.assign(4 * n_ * stride_, 0);
    for (int p = 0; p < 3; ++p) {
      for (Element g : po.part(static_cast<Part>(p))) {
        for (int a = 0; a < n_; ++a) {
          const Element x = group_.mul(g, a);
          set(p, a)[x >> 6] |= Word{1} << (x & 63);
          set(3, a)[x >> 6] |= Word{1} << (x & 63);
        }
      }
    }
  }
  const Word* get(int p, Element a) const {
    return data_.data() + (static_cast<std::size_t>(p) * n_ + a) * stride_;
  }
  std::size_t stride() const { return stride_; }

 private:
  Word* set(int p, Element a) {
    return data_.data() + (static_cast<std::size_t>(p) * n_ + a) * stride_;
  }
  const FiniteGroup& group_;
  int n_;
  std::size_t stride_;
  std::vector<Word> data_;
};

constexpr int kIn = 0, kOut = 1, kDelta = 3;

int EvalWithTranslates(const Translates& tr, int lambda, CupVariant variant,
                       std::span<const Element> a) {
  const std::size_t stride = tr.stride();
  std::vector<Word> acc(stride);
  int total = 0;
  auto all_equal = [&](int lo, int hi) {
    for (int i = lo + 1; i < hi; ++i)
      if (a[i] != a[lo]) return false;
    return true;
  };
  for (int j = 0; j < lambda; ++j) {
    const bool tied_prefix = variant != CupVariant::kSymmetric;
    const bool tied_suffix = variant == CupVariant::kOutsideIn;
    if (tied_prefix && !all_equal(0, j)) continue;
    if (tied_suffix && !all_equal(j + 1, lambda)) continue;
    std::fill(acc.begin(), acc.end(), ~Word{0});
    auto meet = [&](const Word* w) {
      for (std::size_t i = 0; i < stride; ++i) acc[i] &= w[i];
    };
    for (int i = 0; i < j; ++i) meet(tr.get(kOut, a[i]));
    meet(tr.get(kDelta, a[j]));
    for (int k = j + 1; k < lambda; ++k) meet(tr.get(kIn, a[k]));
    for (Word w : acc) total += std::popcount(w);
  }
  return total & 1;
}

void CheckLambda(int lambda) {
  if (lambda != 2 && lambda != 3) ThrowUnsupported("lambda must be 2 or 3");
}

}  // namespace

int MasterEval(const PreOrientation& po, int lambda, CupVariant variant,
               std::span<const Element> points) {
  CheckLambda(lambda);
  if (static_cast<int>(points.size()) != lambda) {
    ThrowDomain("need one point per copy");
  }
  for (Element p : points) {
    if (p >= static_cast<Element>(po.element().group().size())) {
      ThrowDomain("point does not belong to the group");
    }
  }
  Translates tr(po);
  return EvalWithTranslates(tr, lambda, variant, points);
}

bool VerifyPreorientation(const PreOrientation& po, int lambda,
                          CupVariant variant) {
  CheckLambda(lambda);
  Translates tr(po);
  const int n = po.element().group().size();
  std::vector<Element> a(lambda, 0);
  while (true) {
    if (EvalWithTranslates(tr, lambda, variant, a)) return false;
    int i = lambda - 1;
    while (i >= 0 && static_cast<int>(a[i]) == n - 1) a[i--] = 0;
    if (i < 0) break;
    ++a[i];
  }
  return true;
}

std::string ToString(Theorem t) {
  switch (t) {
    case Theorem::kWeight3TwoCopy: return "weight3_two_copy";
    case Theorem::kWeight4TwoCopy: return "weight4_two_copy";
    case Theorem::kWeight4NonAssociative: return "weight4_non_associative";
    case Theorem::kWeight4Symmetric: return "weight4_symmetric";
    case Theorem::kWeight6TwoTwoTwo: return "weight6_222";
  }
  return "?";
}

Theorem ParseTheorem(const std::string& s) {
  for (Theorem t : {Theorem::kWeight3TwoCopy, Theorem::kWeight4TwoCopy,
                    Theorem::kWeight4NonAssociative,
                    Theorem::kWeight4Symmetric, Theorem::kWeight6TwoTwoTwo}) {
    if (ToString(t) == s) return t;
  }
  ThrowParse("unknown theorem '" + s + "'");
}

int TheoremWeight(Theorem t) {
  switch (t) {
    case Theorem::kWeight3TwoCopy: return 3;
    case Theorem::kWeight6TwoTwoTwo: return 6;
    default: return 4;
  }
}

namespace {

// One-based shorthand: R(a,b,c,d) is g_a^-1 g_b = g_c^-1 g_d.
Relation R(int a, int b, int c, int d) {
  return {{static_cast<std::uint8_t>(a - 1), static_cast<std::uint8_t>(b - 1)},
          {static_cast<std::uint8_t>(c - 1), static_cast<std::uint8_t>(d - 1)},
          false};
}
Relation RightQ(int a, int b, int c, int d) {
  Relation r = R(a, b, c, d);
  r.right_quotient = true;
  return r;
}

ConditionSet CS(std::vector<Relation> rel, const std::string& src) {
  return {std::move(rel), src};
}

std::vector<TheoremEntry> BuildTheorem(Theorem t) {
  const std::string src = ToString(t);
  const TheoremEntry two_two_zero{
      {2, 2, 0},
      {CS({R(1, 2, 3, 4)}, src), CS({R(1, 2, 4, 3)}, src),
       CS({R(1, 2, 2, 1), R(3, 4, 4, 3)}, src)}};
  switch (t) {
    case Theorem::kWeight3TwoCopy:
      return {{{1, 1, 1}, {CS({R(3, 2, 1, 3)}, src)}}};
    case Theorem::kWeight4TwoCopy:
      return {
          {{1, 1, 2},
           {CS({R(3, 1, 2, 3), R(4, 1, 2, 4)}, src),
            CS({R(3, 1, 2, 4), R(4, 1, 2, 3)}, src)}},
          two_two_zero,
          {{1, 3, 0},
           {CS({R(2, 3, 3, 2), R(2, 4, 4, 2), R(4, 3, 3, 4)}, src),
            CS({R(2, 3, 3, 2), R(2, 4, 4, 3), R(3, 4, 4, 2)}, src),
            CS({R(2, 3, 3, 4), R(2, 4, 4, 2), R(3, 2, 4, 3)}, src),
            CS({R(2, 3, 4, 2), R(2, 4, 3, 2), R(4, 3, 3, 4)}, src)}},
          {{3, 1, 0},
           {CS({R(1, 2, 2, 1), R(1, 3, 3, 1), R(2, 3, 3, 2)}, src),
            CS({R(1, 2, 2, 1), R(1, 3, 3, 2), R(2, 3, 3, 1)}, src),
            CS({R(1, 2, 2, 3), R(1, 3, 3, 1), R(2, 1, 3, 2)}, src),
            CS({R(1, 2, 3, 1), R(1, 3, 2, 1), R(2, 3, 3, 2)}, src)}},
      };
    case Theorem::kWeight4NonAssociative:
      return {{{2, 2, 0},
               {CS({R(1, 2, 2, 1), R(3, 4, 4, 3), R(4, 2, 3, 1)}, src)}}};
    case Theorem::kWeight4Symmetric:
      return {two_two_zero};
    case Theorem::kWeight6TwoTwoTwo:
      return {{{2, 2, 2},
               {CS({R(1, 2, 2, 1), R(3, 4, 4, 3), R(5, 6, 6, 5),
                    RightQ(1, 2, 3, 4), RightQ(3, 4, 5, 6)},
                   src)}}};
  }
  return {};
}

}  // namespace

const std::vector<TheoremEntry>& TheoremConditions(Theorem t) {
  static const std::map<Theorem, std::vector<TheoremEntry>> kAll = [] {
    std::map<Theorem, std::vector<TheoremEntry>> m;
    for (Theorem t : {Theorem::kWeight3TwoCopy, Theorem::kWeight4TwoCopy,
                      Theorem::kWeight4NonAssociative,
                      Theorem::kWeight4Symmetric,
                      Theorem::kWeight6TwoTwoTwo}) {
      m[t] = BuildTheorem(t);
    }
    return m;
  }();
  return kAll.at(t);
}

bool TheoremConditionCheck(const PreOrientation& labeling, Theorem t) {
  if (labeling.element().weight() != TheoremWeight(t)) {
    ThrowDomain("element weight does not match the theorem");
  }
  const Signature sig = labeling.signature();
  const FiniteGroup& group = labeling.element().group();
  for (const auto& entry : TheoremConditions(t)) {
    if (!(entry.signature == sig)) continue;
    std::vector<Element> in = labeling.in(), out = labeling.out(),
                         fr = labeling.free();
    // Partitions are unordered; try every order inside each.
    do {
      do {
        do {
          std::vector<Element> g = in;
          g.insert(g.end(), out.begin(), out.end());
          g.insert(g.end(), fr.begin(), fr.end());
          for (const auto& cs : entry.disjuncts) {
            if (cs.holds(group, g)) return true;
          }
        } while (std::next_permutation(fr.begin(), fr.end()));
      } while (std::next_permutation(out.begin(), out.end()));
    } while (std::next_permutation(in.begin(), in.end()));
  }
  return false;
}

std::string ToString(CheckMode m) {
  return m == CheckMode::kOracle ? "oracle" : "closed_form";
}

CheckMode ParseCheckMode(const std::string& s) {
  if (s == "oracle") return CheckMode::kOracle;
  if (s == "closed_form" || s == "closed-form") return CheckMode::kClosedForm;
  ThrowParse("unknown check mode '" + s + "'");
}

const ConfigurationResult& CachedConfigurations(int weight, Signature sig,
                                                int lambda,
                                                CupVariant variant) {
  using Key = std::tuple<int, int, int, int, int, int>;
  static std::mutex mu;
  static std::map<Key, std::shared_ptr<const ConfigurationResult>> cache;
  const Key key{weight, sig.in, sig.out, sig.free, lambda,
                static_cast<int>(variant)};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto res = std::make_shared<const ConfigurationResult>(
      ConfigurationsFor(weight, sig, lambda, variant));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(res));
  return *it->second;
}

bool ClosedFormValid(const PreOrientation& po, int lambda,
                     CupVariant variant) {
  CheckLambda(lambda);
  const int w = po.element().weight();
  if (w > 6) ThrowUnsupported("closed-form conditions stop at weight 6");
  const Signature sig = po.signature();
  if ((sig.in + sig.out) % 2) return false;
  const ConfigurationResult& cfg =
      CachedConfigurations(w, sig, lambda, variant);
  if (!cfg.viable) return false;
  const std::vector<Element> g = po.indexed();
  const FiniteGroup& group = po.element().group();
  for (const auto& c : cfg.configurations) {
    if (c.conditions.holds(group, g)) return true;
  }
  return false;
}

std::vector<PreOrientation> AllLabelings(const GroupAlgebraElement& element,
                                         bool nontrivial_only) {
  const int w = element.weight();
  if (w > 12) ThrowDomain("too many labelings to enumerate");
  std::vector<PreOrientation> out;
  std::vector<Part> labels(w, Part::kIn);
  while (true) {
    PreOrientation po(element, labels);
    if (!nontrivial_only || po.nontrivial()) out.push_back(std::move(po));
    int i = w - 1;
    while (i >= 0 && labels[i] == Part::kFree) labels[i--] = Part::kIn;
    if (i < 0) break;
    labels[i] = static_cast<Part>(static_cast<int>(labels[i]) + 1);
  }
  return out;
}

std::vector<PreOrientation> EnumeratePreorientations(
    const GroupAlgebraElement& element, int lambda, CupVariant variant,
    CheckMode mode) {
  CheckLambda(lambda);
  if (mode == CheckMode::kClosedForm && element.weight() > 6) {
    ThrowUnsupported("closed-form conditions stop at weight 6");
  }
  std::vector<PreOrientation> out;
  for (auto& po : AllLabelings(element, true)) {
    const Signature sig = po.signature();
    if ((sig.in + sig.out) % 2) continue;
    const bool ok = mode == CheckMode::kOracle
                        ? VerifyPreorientation(po, lambda, variant)
                        : ClosedFormValid(po, lambda, variant);
    if (ok) out.push_back(std::move(po));
  }
  return out;
}

}  // namespace cupgates
