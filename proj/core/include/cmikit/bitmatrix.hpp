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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace cmikit {

/// Dense bit matrix over GF(2), rows packed into 64-bit words.
/// Substrate for stabilizer subsystem entropies (GF(2) rank) and the
/// linear solves used by the Clifford machinery.
class BitMatrix {
 public:
  BitMatrix(size_t rows, size_t cols);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  size_t words_per_row() const { return wpr_; }

  bool get(size_t r, size_t c) const {
    return (data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
  }
  void set(size_t r, size_t c, bool v) {
    uint64_t& w = data_[r * wpr_ + (c >> 6)];
    const uint64_t m = uint64_t{1} << (c & 63);
    w = v ? (w | m) : (w & ~m);
  }

  uint64_t* row(size_t r) { return data_.data() + r * wpr_; }
  const uint64_t* row(size_t r) const { return data_.data() + r * wpr_; }

  void xor_row(size_t dst, size_t src);
  void swap_rows(size_t a, size_t b);
  bool row_is_zero(size_t r) const;

  /// Reduces to row echelon form in place; returns the rank.
  size_t eliminate();

  /// Rank on a scratch copy; the matrix is left untouched.
  size_t rank() const;

  /// True iff the row spaces of a and b coincide. Column counts must match.
  static bool same_row_space(const BitMatrix& a, const BitMatrix& b);

  /// Solves x * M = v over GF(2) for a row vector x (v given as packed
  /// words, cols bits wide). Returns the coefficient vector over rows, or
  /// nullopt when v is outside the row space.
  std::optional<std::vector<uint8_t>> solve_row_combination(
      const std::vector<uint64_t>& v) const;

 private:
  size_t rows_, cols_, wpr_;
  std::vector<uint64_t> data_;
};

}  // namespace cmikit
