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

#include <map>

#include "cmikit/clifford_unitary.hpp"
#include "cmikit/tableau.hpp"

using namespace cmikit;

namespace {

CliffordTableau bell_pair() {
  CliffordTableau t(2);
  t.apply_gate(Gate::H, 0);
  t.apply_gate(Gate::CNOT, 0, 1);
  return t;
}

// Canonical key of the state: canonicalized stabilizer strings concatenated.
std::string state_key(CliffordTableau t) {
  t.canonicalize();
  std::string key;
  for (size_t i = 0; i < t.num_qubits(); ++i) key += t.stabilizer(i).to_string();
  return key;
}

}  // namespace

TEST_CASE("bell pair stabilizers and entropy") {
  CliffordTableau t = bell_pair();
  CHECK(t.check_invariants());
  CHECK(t.contains_in_group(PauliString::from_string("+XX")));
  CHECK(t.contains_in_group(PauliString::from_string("+ZZ")));
  CHECK(t.subsystem_entropy({0}) == 1);
  CHECK(t.subsystem_entropy({0, 1}) == 0);
}

TEST_CASE("ghz entropies") {
  CliffordTableau t(3);
  t.apply_gate(Gate::H, 0);
  t.apply_gate(Gate::CNOT, 0, 1);
  t.apply_gate(Gate::CNOT, 1, 2);
  CHECK(t.subsystem_entropy({0}) == 1);
  CHECK(t.subsystem_entropy({0, 1}) == 1);
  CHECK(t.subsystem_entropy({0, 1, 2}) == 0);
}

TEST_CASE("deterministic and random measurements") {
  CliffordTableau t = bell_pair();
  Rng rng(5);
  const MeasureResult zz = t.measure_pauli(PauliString::from_string("+ZZ"), rng);
  CHECK(!zz.was_random);
  CHECK(zz.outcome == +1);

  const MeasureResult z0 = t.measure_pauli(PauliString::from_string("+ZI"), rng);
  CHECK(z0.was_random);
  // After measuring Z_0 the two outcomes must agree: Z_1 is now determined.
  const MeasureResult z1 = t.measure_pauli(PauliString::from_string("+IZ"), rng);
  CHECK(!z1.was_random);
  CHECK(z1.outcome == z0.outcome);
}

TEST_CASE("forced measurement selects the branch") {
  for (int want : {+1, -1}) {
    CliffordTableau t = bell_pair();
    const MeasureResult r = t.measure_pauli_forced(PauliString::from_string("+ZI"), want);
    CHECK(r.was_random);
    CHECK(r.outcome == want);
    CHECK(t.contains_in_group(want == +1 ? PauliString::from_string("+ZI")
                                         : PauliString::from_string("-ZI")));
  }
}

TEST_CASE("same_state ignores generator presentation") {
  CliffordTableau a = bell_pair();
  CliffordTableau b = bell_pair();
  // Multiply b's generators: same group, different rows.
  Rng rng(3);
  const MeasureResult r = b.measure_pauli(PauliString::from_string("+XX"), rng);
  CHECK(!r.was_random);
  CHECK(CliffordTableau::same_state(a, b));
  b.apply_gate(Gate::Z, 0);
  CHECK(!CliffordTableau::same_state(a, b));
}

TEST_CASE("apply_pauli flips anticommuting signs") {
  CliffordTableau t = bell_pair();
  t.apply_pauli(PauliString::from_string("+ZI"));  // anticommutes with XX
  CHECK(t.contains_in_group(PauliString::from_string("-XX")));
  CHECK(t.contains_in_group(PauliString::from_string("+ZZ")));
}

TEST_CASE("random stabilizer states are uniform for n = 1") {
  // 6 single-qubit stabilizer states; chi-square over 1200 draws.
  std::map<std::string, int> counts;
  Rng rng(17);
  const int draws = 1200;
  for (int i = 0; i < draws; ++i) counts[state_key(random_stabilizer_state(1, rng))]++;
  CHECK(counts.size() == 6);
  double chi2 = 0;
  const double expect = draws / 6.0;
  for (const auto& [k, c] : counts) chi2 += (c - expect) * (c - expect) / expect;
  CHECK(chi2 < 20.5);  // chi-square_{5, 0.999}
}

TEST_CASE("random stabilizer states are uniform for n = 2") {
  // 60 two-qubit stabilizer states; chi-square over 6000 draws.
  std::map<std::string, int> counts;
  Rng rng(23);
  const int draws = 6000;
  for (int i = 0; i < draws; ++i) counts[state_key(random_stabilizer_state(2, rng))]++;
  CHECK(counts.size() == 60);
  double chi2 = 0;
  const double expect = draws / 60.0;
  for (const auto& [k, c] : counts) chi2 += (c - expect) * (c - expect) / expect;
  CHECK(chi2 < 98.3);  // chi-square_{59, 0.999}
}

TEST_CASE("entropy is invariant under complementation for pure states") {
  Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    CliffordTableau t = random_stabilizer_state(5, rng);
    CHECK(t.subsystem_entropy({0, 2}) == t.subsystem_entropy({1, 3, 4}));
  }
}
