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

#include "cupgates/complexes.hpp"

#include <stdexcept>

#include "cupgates/error.hpp"

namespace cupgates {

std::string ToString(ProductKind kind) {
  return kind == ProductKind::kBalanced ? "balanced" : "hypergraph";
}

ProductKind ParseProductKind(const std::string& s) {
  if (s == "balanced") return ProductKind::kBalanced;
  if (s == "hypergraph") return ProductKind::kHypergraph;
  ThrowParse("unknown product kind '" + s + "'");
}

std::vector<Element> CssCode::coordinates(std::uint32_t index) const {
  if (kind_ == ProductKind::kBalanced) return {index};
  const std::uint32_t g = group_->size();
  std::vector<Element> c(factors_.size());
  for (auto& x : c) {
    x = index % g;
    index /= g;
  }
  return c;
}

std::uint32_t CssCode::encode(const std::vector<Element>& coords) const {
  if (kind_ == ProductKind::kBalanced) return coords.at(0);
  const std::uint32_t g = group_->size();
  std::uint32_t idx = 0;
  for (std::size_t t = coords.size(); t-- > 0;) idx = idx * g + coords[t];
  return idx;
}

CssCode::CssCode(std::vector<TwoTermComplex> factors, ProductKind kind)
    : factors_(std::move(factors)), kind_(kind) {
  const int nf = static_cast<int>(factors_.size());
  if (nf != 2 && nf != 3) ThrowDomain("product needs two or three factors");
  group_ = factors_[0].coboundary().group_ptr();
  for (const auto& f : factors_) {
    if (!(f.coboundary().group() == *group_)) {
      ThrowDomain("factors are over different groups");
    }
  }
  if (kind_ == ProductKind::kBalanced && !group_->is_commutative()) {
    ThrowUnsupported("balanced product over a non-abelian group");
  }
  const std::size_t g = group_->size();
  sector_size_ = 1;
  if (kind_ == ProductKind::kBalanced) {
    sector_size_ = g;
  } else {
    for (int t = 0; t < nf; ++t) sector_size_ *= g;
  }
  n_ = nf * sector_size_;
  if (nf == 2) {
    blocks2_ = {{0, 1}};
  } else {
    blocks2_ = {{0, 1}, {0, 2}, {1, 2}};
  }

  // Image of a cell under the coboundary of factor t, as cell indices.
  auto push = [&](std::uint32_t cell, int t, std::vector<std::uint32_t>& out) {
    out.clear();
    const auto& delta = factors_[t].coboundary().support();
    if (kind_ == ProductKind::kBalanced) {
      for (Element d : delta) out.push_back(group_->mul(d, cell));
    } else {
      auto c = coordinates(cell);
      const Element orig = c[t];
      for (Element d : delta) {
        c[t] = group_->mul(d, orig);
        out.push_back(encode(c));
      }
    }
  };

  std::vector<std::uint32_t> img;
  hx_ = BitMatrix(sector_size_, n_);
  for (std::uint32_t c = 0; c < sector_size_; ++c) {
    for (int t = 0; t < nf; ++t) {
      push(c, t, img);
      for (auto y : img) hx_.flip(c, qubit(t, y));
    }
  }
  hz_ = BitMatrix(blocks2_.size() * sector_size_, n_);
  for (std::size_t b = 0; b < blocks2_.size(); ++b) {
    const auto [s, t] = blocks2_[b];
    // A qubit in sector s reaches the block through factor t and vice versa.
    for (std::uint32_t y = 0; y < sector_size_; ++y) {
      push(y, t, img);
      for (auto z : img) hz_.flip(b * sector_size_ + z, qubit(s, y));
      push(y, s, img);
      for (auto z : img) hz_.flip(b * sector_size_ + z, qubit(t, y));
    }
  }
  if (!(hx_ * hz_.transpose()).is_zero()) {
    throw std::logic_error("constructed code violates hx * hz^T = 0");
  }
  hx_space_ = RowSpace(hx_);
  hz_space_ = RowSpace(hz_);
  k_ = n_ - hx_space_.rank() - hz_space_.rank();
}

CssCode BuildProductCode(std::vector<TwoTermComplex> factors,
                         ProductKind kind) {
  return CssCode(std::move(factors), kind);
}

namespace {

BitMatrix QuotientBasis(const BitMatrix& kernel_of, const RowSpace& modulo,
                        const BitMatrix& modulo_rows) {
  const BitMatrix ker = KernelBasis(kernel_of);
  BitMatrix span = modulo_rows;
  RowSpace space = modulo;
  BitMatrix out(0, kernel_of.cols());
  for (std::size_t i = 0; i < ker.rows(); ++i) {
    BitVector v = ker.row_vector(i);
    modulo.reduce(v.words());
    BitVector w = v;
    space.reduce(w.words());
    if (w.is_zero()) continue;
    out.append_row(v);
    span.append_row(v);
    space = RowSpace(span);
  }
  return out;
}

}  // namespace

BitMatrix CohomologyBasis(const CssCode& code) {
  return QuotientBasis(code.hz(), code.hx_space(), code.hx());
}

BitMatrix HomologyBasis(const CssCode& code) {
  return QuotientBasis(code.hx(), code.hz_space(), code.hz());
}

}  // namespace cupgates
