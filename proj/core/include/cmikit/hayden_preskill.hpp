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

#include <utility>
#include <vector>

#include "cmikit/clifford_unitary.hpp"
#include "cmikit/dense.hpp"
#include "cmikit/infotheory.hpp"

namespace cmikit {

/// Mirror-circuit layout: A and C each Bell-paired into B, an internal EPR
/// block linking the two halves of B, a scrambler U on the left half L and
/// its complex conjugate on the right half R. Bell measurements act on the
/// mirror pairs (L[i], R[i]).
struct HpLayout {
  size_t n_a = 0, n_c = 0, n_b = 0, h = 0;  // h = (n_b - n_a - n_c) / 2
  std::vector<int> A, C, B;
  std::vector<int> L, R;                      // scrambler domains, |L| = |R|
  std::vector<std::pair<int, int>> pairs;     // measured mirror pairs
  size_t total = 0;
  Partition partition() const;
};

/// Requires n_a = n_c and n_b - n_a - n_c even and nonnegative.
HpLayout hp_layout(size_t n_a, size_t n_b, size_t n_c);

/// Initial Bell-pair tableau of the layout (before the scrambler).
CliffordTableau hp_initial_state(const HpLayout& lay);

/// Initial state with U applied on L and conj(U) on R.
CliffordTableau hp_clifford_state(const HpLayout& lay, const CliffordUnitary& u);

/// Samples a scrambler and a random pair order, measures Bell stabilizers
/// pair by pair; returns delta_i[m] for m = 0..max_m.
std::vector<double> hp_clifford_trace(size_t n_a, size_t n_b, size_t n_c, size_t max_m, Rng& rng);

/// Dense mirror state with a Haar scrambler.
DenseState hp_haar_state(const HpLayout& lay, const CMat& u);

/// Born-averaged delta_i[m] over full branch enumeration for one scrambler
/// draw; pair_order lists indices into lay.pairs.
std::vector<double> hp_haar_delta_trace(const HpLayout& lay, const CMat& u,
                                        const std::vector<size_t>& pair_order);

struct HaarHpResult {
  std::vector<double> mean_delta_i;   // index m
  std::vector<double> stderr_delta_i;
  size_t critical_m = 0;              // first m with a full +2 increment
};
HaarHpResult hayden_preskill_haar(size_t n_a, size_t n_b, size_t n_c, size_t n_seeds, Rng& rng);

struct PostSelectionRun {
  std::vector<double> delta_i;   // after each measured pair
  std::vector<double> fidelity;  // overlap with the decoded target state
  std::vector<double> branch_p;
};

/// Sequentially measures the mirror pairs in order, post-selecting the given
/// Bell outcomes (0 is the good projector). Throws on zero-probability
/// branches.
PostSelectionRun yk_postselection(size_t n_a, size_t n_b, size_t n_c,
                                  const std::vector<int>& outcomes, Rng& rng);

/// Pauli correction mapping the realized outcome branch onto the good
/// branch; both tableaus must share stabilizer bit patterns (differ only in
/// signs).
PauliString yk_decoder(const CliffordTableau& realized, const CliffordTableau& good);

struct YkDecoderTrial {
  bool decoded_ok = false;
  bool good_outcomes_realized = false;  // trial happened to draw all-good
  PauliString d;
};
/// One Clifford instance: random scrambler, random outcomes on m pairs,
/// decoder applied, stabilizer-group equality with the forced-good branch.
YkDecoderTrial yk_clifford_decoder_trial(size_t n_a, size_t n_b, size_t n_c, size_t m, Rng& rng);

struct PullbackReport {
  bool all_ac_supported = true;
  bool independent = false;
  std::vector<PauliString> ac_ops;
};
/// Conjugates the measured Bell stabilizers of the chosen pairs backwards
/// through the mirror circuit and reduces them modulo the initial stabilizer
/// group to operators supported on A and C; checks GF(2) independence.
PullbackReport hp_pullback_check(const HpLayout& lay, const CliffordUnitary& u,
                                 const std::vector<size_t>& pair_idx);

}  // namespace cmikit
