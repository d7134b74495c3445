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

#include <cstdint>
#include <functional>
#include <vector>

#include "cmikit/bitmatrix.hpp"
#include "cmikit/pauli.hpp"
#include "cmikit/rng.hpp"

namespace cmikit {

enum class Gate { H, S, CNOT, CZ, X, Y, Z };

struct MeasureResult {
  int outcome;      // +1 or -1
  bool was_random;  // false when the outcome was determined
};

/// Full stabilizer + destabilizer tableau of a pure stabilizer state.
/// Generators are stored as packed Pauli rows; subsystem entropies come
/// from GF(2) ranks of column-restricted stabilizer rows.
class CliffordTableau {
 public:
  /// |0...0>: stab[i] = Z_i, destab[i] = X_i. n must be >= 1.
  explicit CliffordTableau(size_t n);

  size_t num_qubits() const { return n_; }
  uint64_t generation_counter() const { return generation_; }

  const PauliString& stabilizer(size_t i) const { return stab_[i]; }
  const PauliString& destabilizer(size_t i) const { return destab_[i]; }
  std::vector<PauliString>& stabilizers() { return stab_; }
  const std::vector<PauliString>& stabilizers() const { return stab_; }
  std::vector<PauliString>& destabilizers() { return destab_; }

  void apply_gate(Gate g, size_t a);             // single-qubit
  void apply_gate(Gate g, size_t a, size_t b);   // two-qubit

  /// Measures the Hermitian Pauli p. Random outcomes draw one bit from rng.
  MeasureResult measure_pauli(const PauliString& p, Rng& rng);

  /// Measurement with a chosen branch: random outcomes are replaced by
  /// desired_outcome (+1/-1); deterministic outcomes are returned as-is.
  MeasureResult measure_pauli_forced(const PauliString& p, int desired_outcome);

  /// Entanglement entropy (bits, exact integer) of the given qubit subset.
  int subsystem_entropy(const std::vector<int>& subset) const;

  /// True iff p (up to sign) is in the stabilizer group; sign_out receives
  /// the sign the group assigns to p's bit pattern.
  bool contains_in_group(const PauliString& p, int* sign_out = nullptr) const;

  /// Canonicalizes the stabilizer rows by Gaussian elimination (signs kept
  /// consistent, destabilizers co-transformed to preserve the pairing).
  void canonicalize();

  /// True iff both tableaus describe the same state (same signed group).
  static bool same_state(const CliffordTableau& a, const CliffordTableau& b);

  /// Conjugates the state by the Hermitian Pauli p (flips stabilizer signs
  /// that anticommute with p).
  void apply_pauli(const PauliString& p);

  /// Consistency check of the tableau invariants (commutation structure,
  /// pairing, Hermitian phases). Intended for tests.
  bool check_invariants() const;

 private:
  MeasureResult measure_impl(const PauliString& p, const std::function<int()>& outcome_fn);
  void row_mul_stab(size_t dst, size_t src);  // stab[dst] *= stab[src], destab[src] *= destab[dst]

  size_t n_;
  std::vector<PauliString> stab_, destab_;
  uint64_t generation_ = 0;
};

}  // namespace cmikit
