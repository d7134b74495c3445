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

#include <numeric>

#include "cmikit/hayden_preskill.hpp"

using namespace cmikit;

TEST_CASE("layout geometry") {
  const HpLayout lay = hp_layout(3, 10, 3);
  CHECK(lay.h == 2);
  CHECK(lay.L.size() == lay.R.size());
  CHECK(lay.pairs.size() == lay.L.size());
  CHECK(lay.total == 16);
  CHECK_THROWS_AS(hp_layout(3, 9, 3), std::invalid_argument);  // odd h
}

TEST_CASE("initial state is all bell pairs") {
  const HpLayout lay = hp_layout(2, 6, 2);
  const CliffordTableau t = hp_initial_state(lay);
  // Before scrambling, A and C are maximally entangled into B.
  CHECK(t.subsystem_entropy(lay.A) == 2);
  CHECK(t.subsystem_entropy(lay.C) == 2);
  const Partition part = lay.partition();
  const TableauEntropy src(t);
  CHECK(cmi(src, part) == doctest::Approx(0.0));
}

TEST_CASE("clifford trace grows by exactly 2 for small m") {
  // Pair counts well below min(n_a, n_c) give delta_i = 2m essentially
  // always; check every step up to m = n_a - 3.
  Rng rng(71);
  const size_t n_a = 6, n_b = 20, n_c = 6;
  int ok = 0;
  const int runs = 30;
  for (int r = 0; r < runs; ++r) {
    const std::vector<double> trace = hp_clifford_trace(n_a, n_b, n_c, n_a - 3, rng);
    bool exact = true;
    for (size_t m = 0; m < trace.size(); ++m)
      if (trace[m] != doctest::Approx(2.0 * m)) exact = false;
    if (exact) ++ok;
  }
  CHECK(ok == runs);
}

TEST_CASE("clifford trace stays bounded and monotone for all m") {
  // Near saturation the trace can take odd integer values (GHZ-like
  // residual correlations), so only the cap and monotonicity are invariant.
  Rng rng(73);
  const std::vector<double> trace = hp_clifford_trace(4, 12, 4, 6, rng);
  for (size_t m = 0; m < trace.size(); ++m) {
    CHECK(trace[m] <= 2.0 * std::min<size_t>(m, 4) + 1e-9);
    if (m > 0) CHECK(trace[m] >= trace[m - 1] - 1e-9);
  }
}

TEST_CASE("pullback ops are AC supported and independent for small m") {
  Rng rng(79);
  const HpLayout lay = hp_layout(5, 16, 5);
  for (int trial = 0; trial < 10; ++trial) {
    const CliffordUnitary u = CliffordUnitary::random(lay.L.size(), rng);
    std::vector<size_t> idx(lay.pairs.size());
    std::iota(idx.begin(), idx.end(), size_t{0});
    for (size_t i = idx.size(); i > 1; --i) std::swap(idx[i - 1], idx[rng.below(i)]);
    idx.resize(2);  // m = 2 pairs -> 4 measured stabilizers
    const PullbackReport rep = hp_pullback_check(lay, u, idx);
    CHECK(rep.all_ac_supported);
    CHECK(rep.independent);
    CHECK(rep.ac_ops.size() == 4);
  }
}

TEST_CASE("haar hayden preskill is submaximal") {
  Rng rng(83);
  const HaarHpResult res = hayden_preskill_haar(1, 6, 1, 40, rng);
  REQUIRE(res.mean_delta_i.size() >= 2);
  // First pair: mean delta_i clearly below the Clifford value of 2.
  CHECK(res.mean_delta_i[1] < 2.0 - 5.0 * res.stderr_delta_i[1]);
  // Trace is non-decreasing in m.
  for (size_t m = 1; m < res.mean_delta_i.size(); ++m)
    CHECK(res.mean_delta_i[m] >= res.mean_delta_i[m - 1] - 1e-9);
  // Knee location: within one pair of the n_b - 2m = n_a + n_c estimate.
  CHECK(std::abs(static_cast<double>(res.critical_m) - 2.0) <= 1.0);
}

TEST_CASE("yk postselection on good outcomes teleports") {
  Rng rng(89);
  const size_t n_pairs = hp_layout(2, 8, 2).pairs.size();
  const PostSelectionRun run =
      yk_postselection(2, 8, 2, std::vector<int>(n_pairs, 0), rng);
  REQUIRE(!run.fidelity.empty());
  // Fidelity is non-decreasing under good projectors and ends at 1.
  for (size_t i = 1; i < run.fidelity.size(); ++i)
    CHECK(run.fidelity[i] >= run.fidelity[i - 1] - 1e-9);
  CHECK(run.fidelity.back() == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("yk decoder maps any branch to the good branch") {
  Rng rng(97);
  int ok = 0;
  const int runs = 25;
  for (int r = 0; r < runs; ++r) {
    const YkDecoderTrial trial = yk_clifford_decoder_trial(2, 8, 2, 3, rng);
    if (trial.decoded_ok) ++ok;
  }
  CHECK(ok == runs);
}
