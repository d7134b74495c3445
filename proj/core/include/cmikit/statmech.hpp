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

#include <array>
#include <cstddef>
#include <vector>

namespace cmikit {

/// Three coarse-grained Ising spins S_A, S_B, S_C with summed boundary fields
/// and a uniform A-B / B-C coupling. The Boltzmann exponent is
///   h_A S_A + h_B S_B + h_C S_C - j S_A S_B - j S_B S_C,
/// so j < 0 is the ferromagnetic side. Entropy and landscape helpers take a
/// nonnegative depth-proportional coupling and negate it internally.
struct MeanFieldParams {
  double h_a = 0, h_b = 0, h_c = 0;
  double j = 0;
};

/// ln Z over the 8 spin configurations, evaluated with log-sum-exp so large
/// couplings (|j| ~ 500) stay finite.
double log_partition_function(const MeanFieldParams& p);

/// Z itself; may overflow to +inf for extreme parameters, use the log form
/// or free_energy when magnitudes are large.
double partition_function(const MeanFieldParams& p);

/// F = -ln Z.
double free_energy(const MeanFieldParams& p);

/// The spin configuration with the largest Boltzmann weight.
std::array<int, 3> dominant_config(const MeanFieldParams& p);

enum class MfRegion { kA, kC, kAC };

/// Reference sign pattern applied to the A and C boundary fields. Entropies
/// compare a condition with a region's signs flipped against this reference.
struct FieldCondition {
  int sigma_a = 1;
  int sigma_c = 1;
};

/// Domain-wall free energy analog of an entanglement entropy, in units of
/// ln 2: [F(region's boundary fields flipped) - F(reference)] / ln 2.
/// coupling >= 0 is depth-proportional (internally j = -coupling). Can be
/// negative in pathological corners; reported raw.
double mf_entropy(MfRegion region, double coupling, double h_ac, double h_b,
                  const FieldCondition& cond = {});

/// Mutual-information analog between A and C mirroring the CMI combination:
/// S(A) + S(C) - S(AC) in domain-wall form.
double mf_delta_i(double coupling, double h_ac, double h_b,
                  const FieldCondition& cond = {});

struct MeanFieldLandscape {
  std::vector<double> couplings;  // nonnegative, depth-proportional
  std::vector<double> h_b;        // summed field on the unmeasured B spins
  double h_ac = 0;
  std::vector<double> delta_i;    // row-major: couplings x h_b

  double at(size_t coupling_idx, size_t h_b_idx) const;
};

/// delta-I analog over a (coupling, h_B) grid at fixed h_A = h_C = h_ac.
MeanFieldLandscape mf_landscape(const std::vector<double>& couplings,
                                const std::vector<double>& h_b, double h_ac);

/// Second-order crossover estimate along a fixed-h_B column: the coupling
/// maximizing |d2F/dJ2| (central second difference on the given grid).
double mf_crossover_coupling(const std::vector<double>& couplings, double h_ac,
                             double h_b);

/// First coupling on the grid where the delta-I analog reaches the given
/// fraction of its value at the last grid point. Returns the last coupling
/// when the threshold is never reached.
double mf_onset_coupling(const std::vector<double>& couplings, double h_ac,
                         double h_b, double fraction = 0.5);

/// True when the two S_B branches of the flipped-A condition have near-
/// degenerate conditional free energies (within tol in ln-weight), the
/// first-order bistability analog.
bool mf_bistable(double coupling, double h_ac, double h_b, double tol = 1.0);

/// Spearman rank correlation of two equal-length value sequences. Ties get
/// average ranks. Returns 0 for degenerate (constant) inputs.
double spearman_rho(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace cmikit
