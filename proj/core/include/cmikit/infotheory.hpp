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

#include "cmikit/dense.hpp"
#include "cmikit/tableau.hpp"

namespace cmikit {

/// Named qubit index sets. E collects decohered (erased) qubits; R is an
/// optional purifying reference that never enters any entropy combination
/// directly.
struct Partition {
  std::vector<int> A, B, C, E, R;

  size_t n_a() const { return A.size(); }
  size_t n_b() const { return B.size(); }
  size_t n_c() const { return C.size(); }
  size_t k() const { return E.size(); }

  /// Contiguous blocks A | B | C on qubits [0, nA+nB+nC).
  static Partition contiguous(size_t na, size_t nb, size_t nc);

  /// Moves qubit q from B to E (erasure bookkeeping in the dilated picture).
  void erase_from_b(int q);

  bool disjoint() const;
  static std::vector<int> join(const std::vector<const std::vector<int>*>& sets);
};

/// Entropy-query interface: everything above the backends asks only for
/// S(subset) in bits.
class EntropySource {
 public:
  virtual ~EntropySource() = default;
  virtual double entropy(const std::vector<int>& subset) const = 0;
  virtual std::string backend_name() const = 0;
};

class TableauEntropy final : public EntropySource {
 public:
  explicit TableauEntropy(const CliffordTableau& t) : t_(&t) {}
  double entropy(const std::vector<int>& subset) const override {
    return static_cast<double>(t_->subsystem_entropy(subset));
  }
  std::string backend_name() const override { return "stabilizer"; }

 private:
  const CliffordTableau* t_;
};

class PureDenseEntropy final : public EntropySource {
 public:
  explicit PureDenseEntropy(const DenseState& psi) : psi_(&psi) {}
  double entropy(const std::vector<int>& subset) const override {
    return psi_->subsystem_entropy(subset);
  }
  std::string backend_name() const override { return "dense-pure"; }

 private:
  const DenseState* psi_;
};

class MixedDenseEntropy final : public EntropySource {
 public:
  explicit MixedDenseEntropy(const DensityMatrix& rho) : rho_(&rho) {}
  double entropy(const std::vector<int>& subset) const override {
    return rho_->subsystem_entropy(subset);
  }
  std::string backend_name() const override { return "dense-mixed"; }

 private:
  const DensityMatrix* rho_;
};

struct EntropyReport {
  double s_ab = 0, s_bc = 0, s_b = 0, s_abc = 0;
  double s_a = 0, s_c = 0, s_ac = 0, s_e = 0;
  double cmi = 0;
  std::string backend;
};

/// S(AB) + S(BC) - S(B) - S(ABC).
double cmi(const EntropySource& src, const Partition& part);
EntropyReport entropy_report(const EntropySource& src, const Partition& part);
double delta_I(const EntropyReport& before, const EntropyReport& after);

/// Generic bound margin 2 S(ABC_post) - delta_I; contract: >= -1e-9.
double check_generic_bound(double delta_i, double s_post_abc);

struct MeasurementBoundReport {
  double margin;      // S' - delta_I
  double purity_gap;  // |S(ABC_post) - S'|, meaningful for pure inputs
};
MeasurementBoundReport check_measurement_bound(double delta_i, const OutcomeDistribution& dist,
                                               double s_post_abc);

/// Born-weighted average of branch CMI values after the instrument.
double born_average_cmi(const DensityMatrix& state, const QuantumInstrument& inst,
                        const Partition& part);

/// Same quantity evaluated as the CMI of the post-instrument state with a
/// classical outcome register appended to B (independent oracle path).
double cmi_with_register(const DensityMatrix& state, const QuantumInstrument& inst,
                         const Partition& part);

/// Post-instrument state with the outcome register appended as extra qubits
/// joined to B.
struct RegisterExtended {
  DensityMatrix rho;
  Partition part;
  size_t reg_bits = 0;
};
RegisterExtended extend_with_register(const DensityMatrix& state, const QuantumInstrument& inst,
                                      const Partition& part);

/// Born-weighted post-channel entanglement entropy of A (measurement-induced
/// entanglement when all of B is measured).
double born_average_entropy(const DensityMatrix& state, const QuantumInstrument& inst,
                            const std::vector<int>& subset);

struct PostSelectionEnsemble {
  std::vector<double> p;
  std::vector<DensityMatrix> states;  // conditional states on AC
};

/// max over i != j of tr(rho_i rho_j); 0 for ensembles of fewer than 2
/// effective outcomes.
double orthogonality_report(const PostSelectionEnsemble& ens);

struct DecouplingReport {
  double i_ae = 0, i_be = 0, i_ce = 0, s_e = 0;
  /// delta_I implied by the identity: 2 S(E) - (I_AE + I_BE + I_CE).
  double implied_delta_i() const { return 2 * s_e - (i_ae + i_be + i_ce); }
};
DecouplingReport decoupling_report(const EntropySource& src, const Partition& part);

/// (Holevo information, Shannon entropy of p); lhs <= rhs always, equality
/// iff the ensemble states have orthogonal supports.
std::pair<double, double> holevo_gap(const std::vector<double>& p,
                                     const std::vector<DensityMatrix>& rhos);

struct BellStructureReport {
  bool precondition_ok = false;   // rho_AC maximally mixed, equiprobable outcomes
  bool flat_spectra = false;
  bool equal_dims = false;
  bool marginals_mixed = false;
  size_t expected_dim = 0;
  std::vector<size_t> block_dims;
  bool all_pass() const {
    return precondition_ok && flat_spectra && equal_dims && marginals_mixed;
  }
};

/// Necessary conditions on a saturating post-selection ensemble over AC.
/// measured_bits is the Shannon entropy of the outcome register; the
/// expected block dimension is 2^(N_A + N_C - measured_bits).
BellStructureReport bell_structure_check(const PostSelectionEnsemble& ens, size_t n_a, size_t n_c,
                                         double measured_bits);

}  // namespace cmikit
