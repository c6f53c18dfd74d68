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

#include "cupgates/bitmatrix.hpp"

#include <algorithm>

#include "cupgates/error.hpp"

namespace cupgates {

BitVector BitVector::FromWords(std::size_t size, std::span<const Word> words) {
  BitVector v(size);
  std::copy_n(words.begin(), v.words_.size(), v.words_.begin());
  return v;
}

std::size_t BitVector::popcount() const {
  std::size_t c = 0;
  for (Word w : words_) c += std::popcount(w);
  return c;
}

bool BitVector::is_zero() const {
  for (Word w : words_)
    if (w) return false;
  return true;
}

std::vector<std::size_t> BitVector::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (Word w = words_[i]; w; w &= w - 1) {
      out.push_back(i * 64 + std::countr_zero(w));
    }
  }
  return out;
}

BitVector& BitVector::operator^=(const BitVector& o) {
  if (o.size_ != size_) ThrowDomain("bit vector length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

BitMatrix BitMatrix::Identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::FromRows(std::size_t cols,
                              const std::vector<BitVector>& rows) {
  BitMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

BitMatrix BitMatrix::FromDense(const std::vector<std::vector<int>>& dense) {
  const std::size_t cols = dense.empty() ? 0 : dense[0].size();
  BitMatrix m(dense.size(), cols);
  for (std::size_t r = 0; r < dense.size(); ++r) {
    if (dense[r].size() != cols) ThrowDomain("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c)
      if (dense[r][c] & 1) m.set(r, c);
  }
  return m;
}

BitVector BitMatrix::row_vector(std::size_t r) const {
  return BitVector::FromWords(cols_, row(r));
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
  if (v.size() != cols_) ThrowDomain("row length mismatch");
  std::copy(v.words().begin(), v.words().end(), row(r).begin());
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) {
  Word* d = data_.data() + dst * stride_;
  const Word* s = data_.data() + src * stride_;
  for (std::size_t i = 0; i < stride_; ++i) d[i] ^= s[i];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

void BitMatrix::append_row(const BitVector& v) {
  if (rows_ == 0 && cols_ == 0) {
    cols_ = v.size();
    stride_ = WordsFor(cols_);
  }
  if (v.size() != cols_) ThrowDomain("row length mismatch");
  data_.insert(data_.end(), v.words().begin(), v.words().end());
  ++rows_;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto rw = row(r);
    for (std::size_t i = 0; i < stride_; ++i) {
      for (Word w = rw[i]; w; w &= w - 1) {
        t.set(i * 64 + std::countr_zero(w), r);
      }
    }
  }
  return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& o) const {
  if (cols_ != o.rows_) ThrowDomain("matrix shape mismatch");
  BitMatrix out(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto dst = out.row(r);
    const auto rw = row(r);
    for (std::size_t i = 0; i < stride_; ++i) {
      for (Word w = rw[i]; w; w &= w - 1) {
        const auto src = o.row(i * 64 + std::countr_zero(w));
        for (std::size_t j = 0; j < out.stride_; ++j) dst[j] ^= src[j];
      }
    }
  }
  return out;
}

BitVector BitMatrix::apply(const BitVector& v) const {
  if (v.size() != cols_) ThrowDomain("vector length mismatch");
  BitVector out(rows_);
  const auto vw = v.words();
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto rw = row(r);
    Word acc = 0;
    for (std::size_t i = 0; i < stride_; ++i) acc ^= rw[i] & vw[i];
    if (std::popcount(acc) & 1) out.set(r);
  }
  return out;
}

BitMatrix BitMatrix::hstack(const BitMatrix& o) const {
  if (rows_ != o.rows_) ThrowDomain("hstack row mismatch");
  BitMatrix out(rows_, cols_ + o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) out.set(r, c);
    for (std::size_t c = 0; c < o.cols_; ++c)
      if (o.get(r, c)) out.set(r, cols_ + c);
  }
  return out;
}

BitMatrix BitMatrix::vstack(const BitMatrix& o) const {
  if (rows_ == 0 && cols_ == 0) return o;
  if (cols_ != o.cols_) ThrowDomain("vstack column mismatch");
  BitMatrix out = *this;
  out.data_.insert(out.data_.end(), o.data_.begin(), o.data_.end());
  out.rows_ += o.rows_;
  return out;
}

BitMatrix BitMatrix::select_rows(const std::vector<std::size_t>& rows) const {
  BitMatrix out(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::copy(row(rows[i]).begin(), row(rows[i]).end(), out.row(i).begin());
  }
  return out;
}

BitMatrix BitMatrix::dedup_rows() const {
  std::vector<std::size_t> keep;
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto rw = row(r);
    if (std::all_of(rw.begin(), rw.end(), [](Word w) { return w == 0; })) {
      continue;
    }
    bool dup = false;
    for (std::size_t k : keep) {
      if (std::equal(rw.begin(), rw.end(), row(k).begin())) {
        dup = true;
        break;
      }
    }
    if (!dup) keep.push_back(r);
  }
  return select_rows(keep);
}

std::vector<std::size_t> BitMatrix::row_weights() const {
  std::vector<std::size_t> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (Word w : row(r)) out[r] += std::popcount(w);
  }
  return out;
}

std::vector<std::size_t> BitMatrix::col_weights() const {
  std::vector<std::size_t> out(cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) ++out[c];
  return out;
}

bool BitMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Word w) { return !w; });
}

std::string BitMatrix::to_string() const {
  std::string s;
  s.reserve(rows_ * (cols_ + 1));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) s += get(r, c) ? '1' : '0';
    s += '\n';
  }
  return s;
}

Echelon RowReduce(const BitMatrix& m) {
  BitMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    const std::size_t wi = c >> 6;
    const Word bit = Word{1} << (c & 63);
    std::size_t p = r;
    while (p < a.rows() && !(a.row(p)[wi] & bit)) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, r);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i != r && (a.row(i)[wi] & bit)) a.xor_row(i, r);
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::size_t> keep(r);
  for (std::size_t i = 0; i < r; ++i) keep[i] = i;
  return {a.select_rows(keep), pivots};
}

std::size_t Rank(const BitMatrix& m) {
  BitMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    const std::size_t wi = c >> 6;
    const Word bit = Word{1} << (c & 63);
    std::size_t p = r;
    while (p < a.rows() && !(a.row(p)[wi] & bit)) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, r);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a.row(i)[wi] & bit) a.xor_row(i, r);
    }
    ++r;
  }
  return r;
}

BitMatrix KernelBasis(const BitMatrix& m) {
  const Echelon e = RowReduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  BitMatrix out(m.cols() - e.pivots.size(), m.cols());
  std::size_t k = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    out.set(k, f);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      if (e.rows.get(i, f)) out.set(k, e.pivots[i]);
    }
    ++k;
  }
  return out;
}

RowSpace::RowSpace(const BitMatrix& m) : cols_(m.cols()), echelon_(RowReduce(m)) {}

void RowSpace::reduce(std::span<Word> v) const {
  const auto& rows = echelon_.rows;
  for (std::size_t i = 0; i < echelon_.pivots.size(); ++i) {
    const std::size_t c = echelon_.pivots[i];
    if ((v[c >> 6] >> (c & 63)) & 1) {
      const auto rw = rows.row(i);
      for (std::size_t j = 0; j < rw.size(); ++j) v[j] ^= rw[j];
    }
  }
}

bool RowSpace::contains(const BitVector& v) const {
  if (v.size() != cols_) ThrowDomain("vector length does not match matrix");
  BitVector w = v;
  reduce(w.words());
  return w.is_zero();
}

bool InRowspace(const BitMatrix& m, const BitVector& v) {
  if (v.size() != m.cols()) {
    ThrowDomain("vector length does not match matrix");
  }
  return RowSpace(m).contains(v);
}

}  // namespace cupgates
