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

#include <string>
#include <vector>

#include "cmikit/clifford_unitary.hpp"
#include "cmikit/infotheory.hpp"

namespace cmikit {

struct CheckItem {
  std::string name;
  double expected = 0, actual = 0, tol = 0;
  bool pass() const { return std::abs(expected - actual) <= tol; }
};

struct ScenarioResult {
  std::string name;
  EntropyReport before, after;
  double delta_i = 0;
  double bound = 0;  // the applicable upper bound on delta_i
  PostSelectionEnsemble ensemble;
  std::vector<CheckItem> checks;

  void add_check(const std::string& check_name, double expected, double actual, double tol) {
    checks.push_back({check_name, expected, actual, tol});
  }
  bool all_pass() const {
    for (const auto& c : checks) {
      if (!c.pass()) return false;
    }
    return true;
  }
};

/// Classical three-bit parity state: CMI 1 before, 0 after discarding B.
ScenarioResult classical_parity_example();
/// Classical redundant bit (two-outcome GHZ distribution): CMI 0 before,
/// 1 after discarding B.
ScenarioResult classical_redundancy_example();

/// Two Bell pairs with a Bell-basis instrument on the middle qubits;
/// delta_i = 2 with four equiprobable orthogonal branches.
ScenarioResult bell_teleportation();

/// Eight-qubit random stabilizer state filtered to S(A)=2, S(C)=2, S(AC)=4
/// whose single-qubit erasure decouples; delta_i = 2 S(E) = 2.
ScenarioResult saturating_erasure_example(Rng& rng);

/// Six-qubit mixed-state example with reference R: erasure saturates the
/// bound while the post-selected AC states overlap (no orthogonality).
ScenarioResult mixed_erasure_counterexample(Rng& rng);

/// Classical GHZ mixed state, X-basis instrument on B: delta_i = 1 with
/// identical branch states.
ScenarioResult mixed_measurement_counterexample();

/// Bell-pairs-to-B construction with a random Clifford on AC: every B qubit
/// erases with delta_i = 2, all B qubits together drop the CMI to 0.
ScenarioResult efficient_eraser(size_t n_a, size_t n_c, Rng& rng);
/// State used by efficient_eraser, for direct inspection.
CliffordTableau efficient_eraser_state(size_t n_a, size_t n_c, Rng& rng, Partition* part_out);

/// Number of B qubits whose individual erasure gives delta_i = 2 S(E) with
/// S(E) > 0.
size_t max_erasable_census(const CliffordTableau& t, const Partition& part);

std::vector<std::string> scenario_names();
/// Dispatch by stable CLI name; throws std::invalid_argument for unknown
/// names.
ScenarioResult run_scenario(const std::string& name, uint64_t seed);

}  // namespace cmikit
