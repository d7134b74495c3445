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

#include "cmikit/rng.hpp"
#include "cmikit/tableau.hpp"

namespace cmikit {

/// k-qubit Clifford unitary represented by the conjugation images
/// U X_i U^dag and U Z_i U^dag (Hermitian Paulis on k qubits).
/// Global phase is not tracked.
class CliffordUnitary {
 public:
  static CliffordUnitary identity(size_t k);
  /// Elementary gate as a unitary on k qubits.
  static CliffordUnitary from_gate(Gate g, size_t k, size_t a);
  static CliffordUnitary from_gate(Gate g, size_t k, size_t a, size_t b);
  /// Uniformly random element of the k-qubit Clifford group (mod phase).
  static CliffordUnitary random(size_t k, Rng& rng);

  size_t num_qubits() const { return k_; }
  const PauliString& image_x(size_t i) const { return xi_[i]; }
  const PauliString& image_z(size_t i) const { return zi_[i]; }
  PauliString& image_x(size_t i) { return xi_[i]; }
  PauliString& image_z(size_t i) { return zi_[i]; }

  /// Image of an arbitrary Pauli under conjugation, exact phase included.
  PauliString conjugate_pauli(const PauliString& p) const;

  /// this * other (other acts first).
  CliffordUnitary compose(const CliffordUnitary& other) const;
  CliffordUnitary inverse() const;
  /// Entrywise complex conjugate in the computational basis.
  CliffordUnitary conjugated() const;

  /// Conjugates the tableau state by this unitary acting on the listed
  /// qubits (in order: unitary qubit i -> tableau qubit qubits[i]).
  void apply_to(CliffordTableau& t, const std::vector<int>& qubits) const;

  /// Embedding into an n_total-qubit unitary acting on the listed qubits,
  /// identity elsewhere.
  CliffordUnitary embed(size_t n_total, const std::vector<int>& qubits) const;

  /// Canonical string key (images concatenated); equal iff same element
  /// of the Clifford group mod global phase.
  std::string key() const;

  bool operator==(const CliffordUnitary& other) const;

  /// Symplectic + sign consistency check. Intended for tests.
  bool check_valid() const;

 private:
  explicit CliffordUnitary(size_t k) : k_(k) {}

  size_t k_ = 0;
  std::vector<PauliString> xi_, zi_;
};

inline CliffordUnitary random_two_qubit_clifford(Rng& rng) {
  return CliffordUnitary::random(2, rng);
}

/// Uniformly random pure stabilizer state: a uniform Clifford applied to
/// |0...0>.
CliffordTableau random_stabilizer_state(size_t n, Rng& rng);

}  // namespace cmikit
