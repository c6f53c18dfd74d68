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

// Dense bit-packed matrices over GF(2).

#ifndef CUPGATES_BITMATRIX_HPP_
#define CUPGATES_BITMATRIX_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cupgates {

using Word = std::uint64_t;

inline std::size_t WordsFor(std::size_t bits) { return (bits + 63) / 64; }

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size)
      : size_(size), words_(WordsFor(size), 0) {}
  static BitVector FromWords(std::size_t size, std::span<const Word> words);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i, bool v = true) {
    const Word m = Word{1} << (i & 63);
    if (v)
      words_[i >> 6] |= m;
    else
      words_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= Word{1} << (i & 63); }

  std::span<Word> words() { return words_; }
  std::span<const Word> words() const { return words_; }
  std::size_t popcount() const;
  bool is_zero() const;
  std::vector<std::size_t> ones() const;
  BitVector& operator^=(const BitVector& o);
  bool operator==(const BitVector& o) const = default;
  std::string to_string() const;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(WordsFor(cols)),
        data_(rows * WordsFor(cols), 0) {}
  static BitMatrix Identity(std::size_t n);
  static BitMatrix FromRows(std::size_t cols,
                            const std::vector<BitVector>& rows);
  static BitMatrix FromDense(const std::vector<std::vector<int>>& dense);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + (c >> 6)] >> (c & 63)) & 1;
  }
  void set(std::size_t r, std::size_t c, bool v = true) {
    Word& w = data_[r * stride_ + (c >> 6)];
    const Word m = Word{1} << (c & 63);
    w = v ? (w | m) : (w & ~m);
  }
  void flip(std::size_t r, std::size_t c) {
    data_[r * stride_ + (c >> 6)] ^= Word{1} << (c & 63);
  }
  std::span<Word> row(std::size_t r) {
    return {data_.data() + r * stride_, stride_};
  }
  std::span<const Word> row(std::size_t r) const {
    return {data_.data() + r * stride_, stride_};
  }
  BitVector row_vector(std::size_t r) const;
  void set_row(std::size_t r, const BitVector& v);
  void xor_row(std::size_t dst, std::size_t src);
  void swap_rows(std::size_t a, std::size_t b);
  void append_row(const BitVector& v);

  BitMatrix transpose() const;
  BitMatrix operator*(const BitMatrix& o) const;
  BitVector apply(const BitVector& v) const;  // M * v
  BitMatrix hstack(const BitMatrix& o) const;
  BitMatrix vstack(const BitMatrix& o) const;
  BitMatrix select_rows(const std::vector<std::size_t>& rows) const;
  // Drops repeated and zero rows, keeping first occurrences.
  BitMatrix dedup_rows() const;
  std::vector<std::size_t> row_weights() const;
  std::vector<std::size_t> col_weights() const;
  bool is_zero() const;
  std::string to_string() const;  // 0/1 grid, one row per line
  bool operator==(const BitMatrix& o) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
  std::vector<Word> data_;
};

struct Echelon {
  BitMatrix rows;                    // reduced rows, pivot columns increasing
  std::vector<std::size_t> pivots;   // pivot column of each row
};

// Reduced row echelon form; zero rows are removed.
Echelon RowReduce(const BitMatrix& m);
std::size_t Rank(const BitMatrix& m);
BitMatrix KernelBasis(const BitMatrix& m);

// Row space of a fixed matrix with its echelon form cached at construction.
class RowSpace {
 public:
  RowSpace() = default;
  explicit RowSpace(const BitMatrix& m);
  std::size_t rank() const { return echelon_.pivots.size(); }
  std::size_t cols() const { return cols_; }
  // Clears pivot positions of v in place.
  void reduce(std::span<Word> v) const;
  bool contains(const BitVector& v) const;
  const Echelon& echelon() const { return echelon_; }

 private:
  std::size_t cols_ = 0;
  Echelon echelon_;
};

bool InRowspace(const BitMatrix& m, const BitVector& v);

}  // namespace cupgates

#endif  // CUPGATES_BITMATRIX_HPP_
