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

#include "doctest.h"

#include "cmikit/bitmatrix.hpp"
#include "cmikit/rng.hpp"

using cmikit::BitMatrix;
using cmikit::Rng;

TEST_CASE("rank of known matrices") {
  BitMatrix m(3, 4);
  // rows: 1001, 0110, 1111 -> third row is the sum of the first two
  m.set(0, 0, true);
  m.set(0, 3, true);
  m.set(1, 1, true);
  m.set(1, 2, true);
  for (int c = 0; c < 4; ++c) m.set(2, c, true);
  CHECK(m.rank() == 2);

  BitMatrix id(5, 5);
  for (int i = 0; i < 5; ++i) id.set(i, i, true);
  CHECK(id.rank() == 5);

  BitMatrix z(4, 7);
  CHECK(z.rank() == 0);
}

TEST_CASE("eliminate preserves row space and is idempotent on rank") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    BitMatrix m(6, 9);
    for (size_t r = 0; r < 6; ++r)
      for (size_t c = 0; c < 9; ++c) m.set(r, c, rng.bit());
    BitMatrix copy = m;
    const size_t rank = m.eliminate();
    CHECK(rank == copy.rank());
    CHECK(BitMatrix::same_row_space(m, copy));
  }
}

TEST_CASE("solve_row_combination finds exact coefficients") {
  Rng rng(12);
  BitMatrix m(5, 8);
  for (size_t r = 0; r < 5; ++r)
    for (size_t c = 0; c < 8; ++c) m.set(r, c, rng.bit());

  // v = rows 0 ^ 2 ^ 3
  std::vector<uint64_t> v(m.words_per_row(), 0);
  for (size_t w = 0; w < v.size(); ++w) v[w] = m.row(0)[w] ^ m.row(2)[w] ^ m.row(3)[w];
  const auto coeff = m.solve_row_combination(v);
  REQUIRE(coeff.has_value());
  std::vector<uint64_t> rebuilt(v.size(), 0);
  for (size_t r = 0; r < 5; ++r) {
    if (!(*coeff)[r]) continue;
    for (size_t w = 0; w < v.size(); ++w) rebuilt[w] ^= m.row(r)[w];
  }
  CHECK(rebuilt == v);
}

TEST_CASE("solve_row_combination rejects vectors outside the row space") {
  BitMatrix m(2, 3);
  m.set(0, 0, true);
  m.set(1, 1, true);
  std::vector<uint64_t> v{0b100};  // e_3, not in span{e_1, e_2}
  CHECK(!m.solve_row_combination(v).has_value());
}
