// Copyright 2026 The cmikit authors
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

#include "cmikit/bitmatrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cmikit {

BitMatrix::BitMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

void BitMatrix::xor_row(size_t dst, size_t src) {
  uint64_t* d = row(dst);
  const uint64_t* s = row(src);
  for (size_t w = 0; w < wpr_; ++w) d[w] ^= s[w];
}

void BitMatrix::swap_rows(size_t a, size_t b) {
  if (a == b) return;
  uint64_t* ra = row(a);
  uint64_t* rb = row(b);
  for (size_t w = 0; w < wpr_; ++w) std::swap(ra[w], rb[w]);
}

bool BitMatrix::row_is_zero(size_t r) const {
  const uint64_t* p = row(r);
  for (size_t w = 0; w < wpr_; ++w)
    if (p[w] != 0) return false;
  return true;
}

size_t BitMatrix::eliminate() {
  size_t pivot_row = 0;
  for (size_t c = 0; c < cols_ && pivot_row < rows_; ++c) {
    const size_t word = c >> 6;
    const uint64_t mask = uint64_t{1} << (c & 63);
    size_t r = pivot_row;
    while (r < rows_ && !(row(r)[word] & mask)) ++r;
    if (r == rows_) continue;
    swap_rows(pivot_row, r);
    const uint64_t* piv = row(pivot_row);
    for (size_t i = 0; i < rows_; ++i) {
      if (i == pivot_row) continue;
      uint64_t* ri = row(i);
      if (ri[word] & mask) {
        for (size_t w = word; w < wpr_; ++w) ri[w] ^= piv[w];
        // columns before the pivot are already clear for rows below;
        // rows above may pick up bits only at later columns, so starting
        // at `word` is safe for rank but we clear fully for RREF use.
        for (size_t w = 0; w < word; ++w) ri[w] ^= piv[w];
      }
    }
    ++pivot_row;
  }
  return pivot_row;
}

size_t BitMatrix::rank() const {
  BitMatrix scratch = *this;
  return scratch.eliminate();
}

bool BitMatrix::same_row_space(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.cols()) return false;
  BitMatrix ea = a;
  BitMatrix eb = b;
  const size_t ra = ea.eliminate();
  const size_t rb = eb.eliminate();
  if (ra != rb) return false;
  // Both in reduced echelon form: canonical bases must match row by row.
  for (size_t r = 0; r < ra; ++r) {
    for (size_t w = 0; w < ea.words_per_row(); ++w) {
      if (ea.row(r)[w] != eb.row(r)[w]) return false;
    }
  }
  return true;
}

std::optional<std::vector<uint8_t>> BitMatrix::solve_row_combination(
    const std::vector<uint64_t>& v) const {
  if (v.size() != wpr_) throw std::invalid_argument("solve: word count mismatch");
  // Augment each row with an identity tag tracking the combination.
  BitMatrix aug(rows_, cols_ + rows_);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t w = 0; w < wpr_; ++w) {
      const uint64_t bits = row(r)[w];
      for (size_t b = 0; b < 64; ++b) {
        const size_t c = w * 64 + b;
        if (c < cols_ && ((bits >> b) & 1)) aug.set(r, c, true);
      }
    }
    aug.set(r, cols_ + r, true);
  }
  // Eliminate on the data columns only.
  size_t pivot_row = 0;
  std::vector<size_t> pivot_col;
  for (size_t c = 0; c < cols_ && pivot_row < rows_; ++c) {
    size_t r = pivot_row;
    while (r < rows_ && !aug.get(r, c)) ++r;
    if (r == rows_) continue;
    aug.swap_rows(pivot_row, r);
    for (size_t i = 0; i < rows_; ++i) {
      if (i != pivot_row && aug.get(i, c)) aug.xor_row(i, pivot_row);
    }
    pivot_col.push_back(c);
    ++pivot_row;
  }
  // Reduce v against the echelon rows, collecting the combination.
  std::vector<uint64_t> res = v;
  std::vector<uint8_t> coeff(rows_, 0);
  auto bit_of = [&](size_t c) { return (res[c >> 6] >> (c & 63)) & 1u; };
  for (size_t p = 0; p < pivot_col.size(); ++p) {
    const size_t c = pivot_col[p];
    if (bit_of(c)) {
      for (size_t cc = 0; cc < cols_; ++cc) {
        if (aug.get(p, cc)) res[cc >> 6] ^= uint64_t{1} << (cc & 63);
      }
      for (size_t r = 0; r < rows_; ++r) {
        if (aug.get(p, cols_ + r)) coeff[r] ^= 1;
      }
    }
  }
  for (size_t w = 0; w < wpr_; ++w) {
    if (res[w] != 0) return std::nullopt;
  }
  return coeff;
}

}  // namespace cmikit
