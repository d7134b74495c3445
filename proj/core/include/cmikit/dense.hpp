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

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "cmikit/pauli.hpp"
#include "cmikit/rng.hpp"
#include "cmikit/tableau.hpp"

namespace cmikit {

using Cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

inline constexpr size_t kMaxDenseStateQubits = 14;
inline constexpr size_t kMaxDensityQubits = 10;
inline constexpr size_t kMaxHaarDim = 128;

class DensityMatrix;

/// Pure state vector on n qubits. Qubit q maps to bit q of the basis index
/// (little-endian).
class DenseState {
 public:
  explicit DenseState(size_t n);  // |0...0>
  DenseState(size_t n, CVec amps);

  static DenseState haar(size_t n, Rng& rng);

  size_t num_qubits() const { return n_; }
  const CVec& amplitudes() const { return amp_; }
  CVec& amplitudes() { return amp_; }

  void apply_unitary(const CMat& u, const std::vector<int>& qubits);
  void apply_pauli(const PauliString& p);

  double norm() const { return amp_.norm(); }
  void normalize();

  DensityMatrix density() const;
  DensityMatrix reduced(const std::vector<int>& keep) const;
  /// Entanglement entropy of the subset, in bits.
  double subsystem_entropy(const std::vector<int>& subset) const;

 private:
  size_t n_;
  CVec amp_;
};

class DensityMatrix {
 public:
  DensityMatrix(size_t n, CMat m);

  static DensityMatrix pure(const DenseState& psi);
  /// Classical (diagonal) state from a probability vector of length 2^n.
  static DensityMatrix diagonal(size_t n, const std::vector<double>& probs);
  static DensityMatrix maximally_mixed(size_t n);

  size_t num_qubits() const { return n_; }
  const CMat& matrix() const { return m_; }
  double trace() const { return m_.trace().real(); }

  void apply_unitary(const CMat& u, const std::vector<int>& qubits);
  DensityMatrix partial_trace(const std::vector<int>& keep) const;
  double von_neumann_entropy() const;  // bits
  double subsystem_entropy(const std::vector<int>& subset) const;
  /// Overlap tr(rho sigma).
  double overlap(const DensityMatrix& other) const;
  /// Eigenvalues sorted descending.
  std::vector<double> spectrum() const;
  bool is_hermitian(double tol = 1e-12) const;

 private:
  size_t n_;
  CMat m_;
};

/// Haar-random unitary of dimension d (complex Ginibre + QR with phase
/// normalization of the R diagonal).
CMat haar_unitary(size_t d, Rng& rng);

/// Expands a unitary on |qubits| qubits to the full 2^n-dimensional space.
CMat embed_unitary(const CMat& u, const std::vector<int>& qubits, size_t n);

/// Dense matrix of a PauliString including its phase.
CMat pauli_matrix(const PauliString& p);

/// |<a|b>|^2.
double fidelity(const DenseState& a, const DenseState& b);

/// Outcome-labelled Kraus sets acting on a fixed qubit subset.
struct QuantumInstrument {
  std::vector<std::vector<CMat>> kraus_sets;  // one list per outcome
  std::vector<int> qubits;

  static QuantumInstrument computational_measurement(const std::vector<int>& qubits);
  /// Four-outcome Bell-basis projective measurement on two qubits.
  static QuantumInstrument bell_measurement(int q1, int q2);
  /// Two-outcome projective measurement of a Hermitian Pauli (restricted to
  /// its support qubits).
  static QuantumInstrument pauli_measurement(const PauliString& p);
  /// Random instrument with the given outcome count (one Kraus per outcome,
  /// exactly trace preserving).
  static QuantumInstrument random(const std::vector<int>& qubits, size_t outcomes, Rng& rng);

  /// Completeness check: sum of K^dag K = identity within tol.
  bool is_complete(double tol = 1e-10) const;
};

struct OutcomeDistribution {
  std::vector<double> p;
  double shannon_bits = 0.0;
};

struct InstrumentResult {
  std::vector<double> p;                  // all outcomes, including p ~ 0
  std::vector<DensityMatrix> states;      // normalized when p > 1e-12
  OutcomeDistribution dist;
};

InstrumentResult apply_instrument(const DensityMatrix& rho, const QuantumInstrument& inst);

/// Forgetting outcomes: the summed Kraus channel.
DensityMatrix apply_channel(const DensityMatrix& rho, const QuantumInstrument& inst);

/// Replaces each listed qubit with |0> (content discarded); the mixed-state
/// form of erasure. The dilated form for pure global states is a relabeling
/// of qubits into E and needs no state change.
DensityMatrix erase_qubits(const DensityMatrix& rho, const std::vector<int>& qubits);

/// Exact state vector of a pure stabilizer state (n <= kMaxDensityQubits).
DenseState stabilizer_to_dense(const CliffordTableau& t);

}  // namespace cmikit
