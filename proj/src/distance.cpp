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

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>
#include <unordered_map>

#include "cupgates/complexes.hpp"
#include "cupgates/error.hpp"

namespace cupgates {
namespace {

unsigned ThreadCount(unsigned requested) {
  if (requested) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

struct SideView {
  const BitMatrix* checks;   // v must satisfy checks * v = 0
  const RowSpace* trivial;   // stabilizers of the same type
};

SideView View(const CssCode& code, Side side) {
  if (side == Side::kX) return {&code.hz(), &code.hx_space()};
  return {&code.hx(), &code.hz_space()};
}

struct WordsHash {
  std::size_t operator()(const std::vector<Word>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (Word w : v) h = (h ^ w) * 1099511628211ull + (w >> 29);
    return h;
  }
};

// Exhaustive search over weight-w vectors. The last support position is found
// by hashing the remaining syndrome against the column table.
class WeightSearch {
 public:
  WeightSearch(const CssCode& code, Side side, unsigned threads)
      : code_(code), view_(View(code, side)), threads_(threads) {
    const BitMatrix cols = view_.checks->transpose();
    n_ = cols.rows();
    stride_ = cols.stride();
    columns_.resize(n_ * stride_);
    for (std::size_t q = 0; q < n_; ++q) {
      std::copy(cols.row(q).begin(), cols.row(q).end(),
                columns_.begin() + q * stride_);
      std::vector<Word> key(cols.row(q).begin(), cols.row(q).end());
      by_syndrome_[key].push_back(q);
    }
  }

  bool has_logical_of_weight(int w, bool use_symmetry) {
    std::vector<std::size_t> firsts;
    if (use_symmetry) {
      for (int s = 0; s < code_.num_factors(); ++s) {
        firsts.push_back(code_.qubit(s, 0));
      }
    } else {
      firsts.resize(n_);
      std::iota(firsts.begin(), firsts.end(), 0);
    }
    if (w == 1) {
      for (std::size_t f : firsts) {
        std::vector<std::size_t> support = {f};
        if (is_zero(col(f)) && is_logical(support)) return true;
      }
      return false;
    }
    // Work items: a first position and a second position after it.
    std::vector<std::pair<std::size_t, std::size_t>> items;
    for (std::size_t f : firsts)
      for (std::size_t s = f + 1; s < n_; ++s) items.push_back({f, s});
    std::atomic<std::size_t> next{0};
    std::atomic<bool> found{false};
    auto worker = [&]() {
      std::vector<Word> stack(static_cast<std::size_t>(w + 1) * stride_);
      std::vector<std::size_t> support(w);
      while (!found.load(std::memory_order_relaxed)) {
        const std::size_t i = next.fetch_add(1);
        if (i >= items.size()) break;
        const auto [f, s] = items[i];
        support[0] = f;
        support[1] = s;
        Word* syn = stack.data();
        for (std::size_t j = 0; j < stride_; ++j) {
          syn[j] = col(f)[j] ^ col(s)[j];
        }
        if (descend(w, 2, s + 1, stack, support, found)) {
          found.store(true);
        }
      }
    };
    const unsigned nt = std::min<std::size_t>(ThreadCount(threads_),
                                              std::max<std::size_t>(items.size(), 1));
    if (nt <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < nt; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    return found.load();
  }

 private:
  const Word* col(std::size_t q) const { return columns_.data() + q * stride_; }
  bool is_zero(const Word* v) const {
    for (std::size_t j = 0; j < stride_; ++j)
      if (v[j]) return false;
    return true;
  }

  bool is_logical(const std::vector<std::size_t>& support) const {
    BitVector v(code_.n());
    for (std::size_t q : support) v.flip(q);
    return !view_.trivial->contains(v);
  }

  // stack[(depth-1)*stride] holds the syndrome of the first `depth` picks.
  bool descend(int w, int depth, std::size_t start, std::vector<Word>& stack,
               std::vector<std::size_t>& support,
               const std::atomic<bool>& found) {
    const Word* syn = stack.data() + (depth - 2) * stride_;
    if (depth == w) return is_zero(syn) && is_logical(support);
    if (depth == w - 1) {
      std::vector<Word> key(syn, syn + stride_);
      auto it = by_syndrome_.find(key);
      if (it == by_syndrome_.end()) return false;
      for (std::size_t q : it->second) {
        if (q < start) continue;
        support[depth] = q;
        if (is_logical(support)) return true;
      }
      return false;
    }
    Word* out = stack.data() + (depth - 1) * stride_;
    const std::size_t last = n_ - (w - depth);
    for (std::size_t q = start; q <= last; ++q) {
      if (found.load(std::memory_order_relaxed)) return false;
      const Word* c = col(q);
      for (std::size_t j = 0; j < stride_; ++j) out[j] = syn[j] ^ c[j];
      support[depth] = q;
      if (descend(w, depth + 1, q + 1, stack, support, found)) return true;
    }
    return false;
  }

  const CssCode& code_;
  SideView view_;
  unsigned threads_;
  std::size_t n_ = 0, stride_ = 0;
  std::vector<Word> columns_;
  std::unordered_map<std::vector<Word>, std::vector<std::size_t>, WordsHash>
      by_syndrome_;
};

void CheckBudget(const CssCode& code, const ExactDistanceOptions& opts) {
  if (opts.w_max < 1) ThrowDomain("w_max must be at least 1");
  const std::uint64_t c = CandidateCount(code, opts.w_max, opts.use_symmetry);
  if (c > opts.ceiling) {
    ThrowBudget("exhaustive search at weight " + std::to_string(opts.w_max) +
                " needs " + std::to_string(c) + " candidates, above the " +
                std::to_string(opts.ceiling) + " ceiling");
  }
}

}  // namespace

std::uint64_t CandidateCount(const CssCode& code, int w, bool use_symmetry) {
  const int n = static_cast<int>(code.n());
  if (!use_symmetry) return Binomial(n, w);
  std::uint64_t total = 0;
  for (int s = 0; s < code.num_factors(); ++s) {
    const int first = static_cast<int>(code.qubit(s, 0));
    total += Binomial(n - first - 1, w - 1);
  }
  return total;
}

std::optional<int> ExactSideDistance(const CssCode& code, Side side,
                                     const ExactDistanceOptions& opts) {
  CheckBudget(code, opts);
  WeightSearch search(code, side, opts.threads);
  for (int w = 1; w <= opts.w_max; ++w) {
    if (search.has_logical_of_weight(w, opts.use_symmetry)) return w;
  }
  return std::nullopt;
}

std::optional<int> DistanceExactByWeight(const CssCode& code,
                                         const ExactDistanceOptions& opts) {
  CheckBudget(code, opts);
  WeightSearch xs(code, Side::kX, opts.threads);
  WeightSearch zs(code, Side::kZ, opts.threads);
  for (int w = 1; w <= opts.w_max; ++w) {
    if (xs.has_logical_of_weight(w, opts.use_symmetry) ||
        zs.has_logical_of_weight(w, opts.use_symmetry)) {
      return w;
    }
  }
  return std::nullopt;
}

WeightScan ScanLowWeight(const CssCode& code, Side side,
                         const ExactDistanceOptions& opts) {
  if (opts.w_max < 1) ThrowDomain("w_max must be at least 1");
  WeightScan scan;
  WeightSearch search(code, side, opts.threads);
  for (int w = 1; w <= opts.w_max; ++w) {
    if (CandidateCount(code, w, opts.use_symmetry) > opts.ceiling) break;
    if (search.has_logical_of_weight(w, opts.use_symmetry)) {
      scan.found = w;
      break;
    }
    scan.excluded_through = w;
  }
  return scan;
}

int DistanceUpperRandomizedSide(const CssCode& code, Side side, int trials,
                                std::uint64_t seed, unsigned threads) {
  if (trials < 1) ThrowDomain("trials must be at least 1");
  if (code.k() == 0) ThrowDomain("code has no logical qubits");
  const SideView view = View(code, side);
  const BitMatrix kernel = KernelBasis(*view.checks);
  const std::size_t n = code.n();
  const std::size_t r = kernel.rows();
  constexpr int kChunk = 16;
  const int chunks = (trials + kChunk - 1) / kChunk;
  std::atomic<int> next{0};
  std::mutex mu;
  int best = static_cast<int>(n) + 1;

  auto worker = [&]() {
    int local = static_cast<int>(n) + 1;
    BitMatrix a;
    std::vector<std::size_t> perm(n);
    BitVector tmp(n);
    auto consider = [&](std::span<const Word> v) {
      int wt = 0;
      for (Word x : v) wt += std::popcount(x);
      if (wt == 0 || wt >= local) return;
      BitVector cand = BitVector::FromWords(n, v);
      if (!view.trivial->contains(cand)) local = wt;
    };
    while (true) {
      const int c = next.fetch_add(1);
      if (c >= chunks) break;
      std::seed_seq seq{static_cast<std::uint32_t>(seed),
                        static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(c),
                        static_cast<std::uint32_t>(side)};
      std::mt19937_64 rng(seq);
      const int count = std::min(kChunk, trials - c * kChunk);
      for (int t = 0; t < count; ++t) {
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        a = kernel;
        // Echelonize with pivots taken in permuted column order.
        std::size_t row = 0;
        for (std::size_t pi = 0; pi < n && row < r; ++pi) {
          const std::size_t col = perm[pi];
          std::size_t p = row;
          while (p < r && !a.get(p, col)) ++p;
          if (p == r) continue;
          a.swap_rows(p, row);
          for (std::size_t i = 0; i < r; ++i) {
            if (i != row && a.get(i, col)) a.xor_row(i, row);
          }
          ++row;
        }
        for (std::size_t i = 0; i < r; ++i) consider(a.row(i));
        // Pairs of rows.
        for (std::size_t i = 0; i < r; ++i) {
          const auto ri = a.row(i);
          for (std::size_t j = i + 1; j < r; ++j) {
            const auto rj = a.row(j);
            int wt = 0;
            for (std::size_t x = 0; x < ri.size(); ++x) {
              wt += std::popcount(ri[x] ^ rj[x]);
            }
            if (wt >= local) continue;
            auto tw = tmp.words();
            for (std::size_t x = 0; x < ri.size(); ++x) tw[x] = ri[x] ^ rj[x];
            consider(tw);
          }
        }
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    best = std::min(best, local);
  };
  const unsigned nt = std::min<unsigned>(ThreadCount(threads), chunks);
  if (nt <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return best;
}

RandomizedDistance DistanceUpperRandomized(const CssCode& code, int trials,
                                           std::uint64_t seed,
                                           unsigned threads) {
  RandomizedDistance out;
  out.dx = DistanceUpperRandomizedSide(code, Side::kX, trials, seed, threads);
  out.dz = DistanceUpperRandomizedSide(code, Side::kZ, trials, seed, threads);
  return out;
}

}  // namespace cupgates
