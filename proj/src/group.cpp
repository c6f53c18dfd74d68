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

#include "cupgates/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <sstream>

#include "cupgates/bitmatrix.hpp"
#include "cupgates/error.hpp"

namespace cupgates {
namespace {

constexpr int kMaxGroupSize = 4096;

}  // namespace

std::shared_ptr<const FiniteGroup> FiniteGroup::Abelian(
    std::vector<int> orders) {
  if (orders.empty()) ThrowDomain("abelian group needs at least one factor");
  long long size = 1;
  for (int n : orders) {
    if (n < 1) ThrowDomain("cyclic factor orders must be positive");
    size *= n;
    if (size > kMaxGroupSize) ThrowDomain("group too large");
  }
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->kind_ = Kind::kAbelianProduct;
  g->orders_ = std::move(orders);
  g->size_ = static_cast<int>(size);
  const int n = g->size_;
  g->table_.resize(static_cast<std::size_t>(n) * n);
  std::vector<std::vector<int>> exps(n);
  for (int a = 0; a < n; ++a) exps[a] = g->exponents(a);
  std::vector<int> tmp(g->orders_.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < tmp.size(); ++i) {
        tmp[i] = (exps[a][i] + exps[b][i]) % g->orders_[i];
      }
      g->table_[static_cast<std::size_t>(a) * n + b] = g->from_exponents(tmp);
    }
  }
  g->finish();
  return g;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::FromCayley(
    const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n < 1 || n > kMaxGroupSize) ThrowDomain("bad Cayley table size");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->kind_ = Kind::kCayleyTable;
  g->size_ = n;
  g->table_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n) {
      ThrowDomain("Cayley table must be square");
    }
    std::vector<bool> seen(n, false);
    for (int b = 0; b < n; ++b) {
      const int c = table[a][b];
      if (c < 0 || c >= n) ThrowDomain("Cayley table entry out of range");
      if (seen[c]) ThrowDomain("Cayley table is not a Latin square");
      seen[c] = true;
      g->table_[static_cast<std::size_t>(a) * n + b] = c;
    }
  }
  for (int b = 0; b < n; ++b) {
    std::vector<bool> seen(n, false);
    for (int a = 0; a < n; ++a) {
      const int c = table[a][b];
      if (seen[c]) ThrowDomain("Cayley table is not a Latin square");
      seen[c] = true;
    }
  }
  for (int a = 0; a < n; ++a) {
    if (table[0][a] != a || table[a][0] != a) {
      ThrowDomain("index 0 must be the identity");
    }
  }
  auto assoc = [&](int a, int b, int c) {
    return g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c));
  };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (!assoc(a, b, c)) ThrowDomain("Cayley table is not associative");
  } else {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 20000; ++t) {
      if (!assoc(pick(rng), pick(rng), pick(rng))) {
        ThrowDomain("Cayley table is not associative");
      }
    }
  }
  g->finish();
  return g;
}

void FiniteGroup::finish() {
  const int n = size_;
  inverse_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mul(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
    }
  }
  commutative_ = true;
  for (int a = 0; a < n && commutative_; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) {
        commutative_ = false;
        break;
      }
}

Element FiniteGroup::checked_mul(Element a, Element b) const {
  if (a >= static_cast<Element>(size_) || b >= static_cast<Element>(size_)) {
    ThrowDomain("element does not belong to this group");
  }
  return mul(a, b);
}

Element FiniteGroup::checked_inv(Element a) const {
  if (a >= static_cast<Element>(size_)) {
    ThrowDomain("element does not belong to this group");
  }
  return inv(a);
}

int FiniteGroup::order_of(Element a) const {
  int k = 1;
  for (Element x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

std::vector<int> FiniteGroup::exponents(Element a) const {
  if (kind_ != Kind::kAbelianProduct) return {static_cast<int>(a)};
  std::vector<int> e(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    e[i] = static_cast<int>(a % orders_[i]);
    a /= orders_[i];
  }
  return e;
}

Element FiniteGroup::from_exponents(std::span<const int> exps) const {
  if (kind_ != Kind::kAbelianProduct) {
    if (exps.size() != 1 || exps[0] < 0 || exps[0] >= size_) {
      ThrowDomain("Cayley-table elements are single indices");
    }
    return static_cast<Element>(exps[0]);
  }
  if (exps.size() != orders_.size()) {
    ThrowDomain("exponent vector length does not match the group");
  }
  Element idx = 0;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    const int n = orders_[i];
    const int e = ((exps[i] % n) + n) % n;
    idx = idx * n + e;
  }
  return idx;
}

std::string FiniteGroup::generator_name(int i) {
  static const char* kNames[] = {"x", "y", "z", "w", "u", "v", "s", "t"};
  if (i < 8) return kNames[i];
  return "g" + std::to_string(i);
}

std::string FiniteGroup::format(Element a) const {
  if (kind_ != Kind::kAbelianProduct) return "g" + std::to_string(a);
  if (a == 0) return "1";
  std::string out;
  const auto e = exponents(a);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    out += generator_name(static_cast<int>(i));
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

bool FiniteGroup::operator==(const FiniteGroup& other) const {
  if (this == &other) return true;
  if (kind_ != other.kind_ || size_ != other.size_) return false;
  if (kind_ == Kind::kAbelianProduct) return orders_ == other.orders_;
  return table_ == other.table_;
}

std::string FiniteGroup::description() const {
  if (kind_ != Kind::kAbelianProduct) {
    return "cayley(" + std::to_string(size_) + ")";
  }
  std::string out;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) out += "x";
    out += "C" + std::to_string(orders_[i]);
  }
  return out;
}

GroupAlgebraElement::GroupAlgebraElement(GroupPtr group,
                                         std::vector<Element> terms)
    : group_(std::move(group)) {
  if (!group_) ThrowDomain("null group");
  for (Element t : terms) {
    if (t >= static_cast<Element>(group_->size())) {
      ThrowDomain("element does not belong to this group");
    }
  }
  std::sort(terms.begin(), terms.end());
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) support_.push_back(terms[i]);
    i = j;
  }
  if (support_.empty()) ThrowDomain("group-algebra element is zero");
}

bool GroupAlgebraElement::contains(Element g) const {
  return std::binary_search(support_.begin(), support_.end(), g);
}

GroupAlgebraElement GroupAlgebraElement::antipode() const {
  std::vector<Element> t;
  t.reserve(support_.size());
  for (Element g : support_) t.push_back(group_->inv(g));
  return GroupAlgebraElement(group_, std::move(t));
}

GroupAlgebraElement GroupAlgebraElement::left_multiply(Element g) const {
  std::vector<Element> t;
  for (Element s : support_) t.push_back(group_->checked_mul(g, s));
  return GroupAlgebraElement(group_, std::move(t));
}

GroupAlgebraElement GroupAlgebraElement::right_multiply(Element g) const {
  std::vector<Element> t;
  for (Element s : support_) t.push_back(group_->checked_mul(s, g));
  return GroupAlgebraElement(group_, std::move(t));
}

std::string GroupAlgebraElement::format() const {
  std::string out;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (i) out += "+";
    out += group_->format(support_[i]);
  }
  return out;
}

bool GroupAlgebraElement::operator==(const GroupAlgebraElement& other) const {
  return *group_ == *other.group_ && support_ == other.support_;
}

std::vector<Element> AlgebraProduct(const FiniteGroup& group,
                                    std::span<const Element> a,
                                    std::span<const Element> b) {
  std::vector<char> parity(group.size(), 0);
  for (Element x : a)
    for (Element y : b) parity[group.mul(x, y)] ^= 1;
  std::vector<Element> out;
  for (int g = 0; g < group.size(); ++g)
    if (parity[g]) out.push_back(g);
  return out;
}

std::vector<Element> AlgebraProduct(const GroupAlgebraElement& a,
                                    const GroupAlgebraElement& b) {
  if (!(a.group() == b.group())) ThrowDomain("mismatched groups");
  return AlgebraProduct(a.group(), a.support(), b.support());
}

BitMatrix RegularRepresentation(const GroupAlgebraElement& alpha) {
  const FiniteGroup& g = alpha.group();
  BitMatrix m(g.size(), g.size());
  for (int h = 0; h < g.size(); ++h)
    for (Element s : alpha.support()) m.flip(g.mul(s, h), h);
  return m;
}

GroupAlgebraElement ParsePolynomial(GroupPtr group, const std::string& text) {
  if (!group->is_abelian_product()) {
    ThrowParse("polynomial strings need an abelian product group");
  }
  const int r = static_cast<int>(group->orders().size());
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) ThrowParse("empty polynomial");
  std::vector<Element> terms;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find('+', pos);
    if (end == std::string::npos) end = s.size();
    const std::string term = s.substr(pos, end - pos);
    if (term.empty()) ThrowParse("empty term in '" + text + "'");
    std::vector<int> exps(r, 0);
    if (term != "1") {
      std::size_t i = 0;
      while (i < term.size()) {
        if (term[i] == '*') {
          ++i;
          continue;
        }
        int gen = -1;
        for (int k = 0; k < r; ++k) {
          const std::string name = FiniteGroup::generator_name(k);
          if (term.compare(i, name.size(), name) == 0) {
            gen = k;
            i += name.size();
            break;
          }
        }
        if (gen < 0) ThrowParse("unknown generator in '" + term + "'");
        int e = 1;
        if (i < term.size() && term[i] == '^') {
          ++i;
          std::size_t j = i;
          while (j < term.size() &&
                 std::isdigit(static_cast<unsigned char>(term[j])))
            ++j;
          if (j == i) ThrowParse("missing exponent in '" + term + "'");
          e = std::stoi(term.substr(i, j - i));
          i = j;
        }
        exps[gen] += e;
      }
    }
    terms.push_back(group->from_exponents(exps));
    pos = end + 1;
  }
  return GroupAlgebraElement(std::move(group), std::move(terms));
}

GroupAlgebraElement CyclicCollapse::map(
    const GroupAlgebraElement& alpha) const {
  std::vector<Element> t;
  for (Element g : alpha.support()) t.push_back(image.at(g));
  return GroupAlgebraElement(cyclic, std::move(t));
}

std::optional<CyclicCollapse> CoprimeCollapse(const FiniteGroup& group) {
  if (!group.is_abelian_product()) {
    ThrowDomain("coprime collapse needs an abelian product group");
  }
  const auto& orders = group.orders();
  for (std::size_t i = 0; i < orders.size(); ++i)
    for (std::size_t j = i + 1; j < orders.size(); ++j)
      if (std::gcd(orders[i], orders[j]) != 1) return std::nullopt;
  const int n = group.size();
  CyclicCollapse out;
  out.cyclic = FiniteGroup::Abelian({n});
  out.image.resize(n);
  for (int g = 0; g < n; ++g) {
    const auto e = group.exponents(g);
    long long a = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      a += static_cast<long long>(e[i]) * (n / orders[i]);
    }
    out.image[g] = static_cast<Element>(a % n);
  }
  return out;
}

CheckElementStream::CheckElementStream(GroupPtr group, int weight,
                                       bool fix_identity)
    : group_(std::move(group)), weight_(weight), fix_identity_(fix_identity) {
  const int n = group_->size();
  if (weight < 1) ThrowDomain("weight must be at least 1");
  if (weight > n) ThrowDomain("weight exceeds the group order");
  // Free slots are drawn from [first, n).
  const int first = fix_identity ? 1 : 0;
  const int free = fix_identity ? weight - 1 : weight;
  total_ = Binomial(n - first, free);
  current_.clear();
  if (fix_identity) current_.push_back(0);
  for (int i = 0; i < free; ++i) current_.push_back(first + i);
}

std::optional<GroupAlgebraElement> CheckElementStream::next() {
  if (done_) return std::nullopt;
  GroupAlgebraElement out(group_, current_);
  // Advance the combination of the free slots.
  const int n = group_->size();
  const int lo = fix_identity_ ? 1 : 0;
  const int k = static_cast<int>(current_.size());
  int i = k - 1;
  while (i >= lo && static_cast<int>(current_[i]) == n - (k - i)) --i;
  if (i < lo) {
    done_ = true;
  } else {
    ++current_[i];
    for (int j = i + 1; j < k; ++j) current_[j] = current_[j - 1] + 1;
  }
  return out;
}

std::vector<GroupAlgebraElement> EnumerateCheckElements(GroupPtr group,
                                                        int weight,
                                                        bool fix_identity) {
  CheckElementStream stream(std::move(group), weight, fix_identity);
  std::vector<GroupAlgebraElement> out;
  while (auto e = stream.next()) out.push_back(std::move(*e));
  return out;
}

namespace {

void Partitions(int n, int max_part, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    Partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> AbelianGroupTypes(int order) {
  if (order < 1) ThrowDomain("group order must be positive");
  if (order == 1) return {{1}};
  // Prime factorization, then one partition of each exponent per prime.
  std::vector<std::pair<int, int>> primes;
  int m = order;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    int e = 0;
    while (m % p == 0) m /= p, ++e;
    primes.push_back({p, e});
  }
  if (m > 1) primes.push_back({m, 1});
  std::vector<std::vector<std::vector<int>>> per_prime;
  for (auto [p, e] : primes) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    Partitions(e, e, cur, parts);
    per_prime.push_back(parts);
  }
  std::vector<std::vector<int>> out;
  std::vector<std::size_t> choice(primes.size(), 0);
  while (true) {
    // Invariant factors: the i-th largest prime powers multiply together.
    std::vector<int> factors;
    for (std::size_t q = 0; q < primes.size(); ++q) {
      const auto& part = per_prime[q][choice[q]];
      for (std::size_t i = 0; i < part.size(); ++i) {
        int pw = 1;
        for (int t = 0; t < part[i]; ++t) pw *= primes[q].first;
        if (factors.size() <= i) factors.push_back(1);
        factors[i] *= pw;
      }
    }
    out.push_back(factors);
    std::size_t q = 0;
    while (q < choice.size() && ++choice[q] == per_prime[q].size()) {
      choice[q++] = 0;
    }
    if (q == choice.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a > b;
  });
  return out;
}

std::uint64_t Binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<std::uint64_t>(r);
}

}  // namespace cupgates
