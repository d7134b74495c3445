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
#include <optional>
#include <string>
#include <vector>

#include "cmikit/clifford_unitary.hpp"
#include "cmikit/infotheory.hpp"
#include "cmikit/rng.hpp"
#include "cmikit/tableau.hpp"

namespace cmikit {

enum class Channel { kMeasurement, kErasure };

std::string channel_name(Channel c);
Channel channel_from_name(const std::string& name);

struct BrickworkGate {
  int a = 0, b = 0;           // bond qubits, b = a + 1
  CliffordUnitary u;          // random two-qubit Clifford
};

/// t layers of random two-qubit Cliffords on alternating even/odd bonds of an
/// open 1D chain. Layer 0 uses even bonds (0,1),(2,3),...
std::vector<BrickworkGate> build_brickwork(size_t n, size_t t, Rng& rng);

/// Deterministic 64-bit stream combiner (splitmix64 chaining) used to derive
/// per-layer and per-cell seeds from (master seed, indices...).
uint64_t combine_seed(uint64_t master, std::initializer_list<uint64_t> parts);

struct SweepConfig {
  size_t n_a = 0, n_b = 0, n_c = 0;
  std::vector<size_t> depths;  // depth grid t
  std::vector<size_t> ks;      // decohered-count grid, each <= n_b
  Channel channel = Channel::kMeasurement;
  size_t seeds = 20;           // replicates per cell
  uint64_t master_seed = 1;

  size_t n_total() const { return n_a + n_b + n_c; }
  void validate() const;  // throws std::invalid_argument
};

struct SweepCell {
  size_t depth = 0, k = 0;
  double delta_i_mean = 0, delta_i_stderr = 0;
  size_t n_samples = 0;
};

struct SweepGrid {
  SweepConfig config;
  std::vector<SweepCell> cells;  // row-major: depths x ks

  const SweepCell& at(size_t depth_idx, size_t k_idx) const;
};

/// Evolves |0..0> by a brickwork circuit, applies the channel to k uniformly
/// chosen B qubits, and records delta_i per (depth, k, replicate). A replicate
/// reuses one circuit realization across the depth grid (cumulative prefixes);
/// decohered qubits and trajectories are deterministic per (master, replicate,
/// depth, k).
SweepGrid run_sweep(const SweepConfig& cfg);

/// Single-cell evaluation, bit-identical to the corresponding run_sweep cell.
double sweep_cell_delta_i(const SweepConfig& cfg, size_t depth, size_t k, size_t replicate);

struct CellReports {
  EntropyReport before, after;
  double delta_i = 0;
  // Channel-specific upper bound on delta_i: the random-outcome Shannon bits
  // for measurement, 2 S(AB'C) for erasure.
  double bound = 0;
};

/// Full entropy reports for one cell-replicate; delta_i matches
/// sweep_cell_delta_i bit-identically.
CellReports sweep_cell_reports(const SweepConfig& cfg, size_t depth, size_t k, size_t replicate);

/// Predicted delta_i for deep (Page-regime) circuits.
/// Measurement: max(0, n_a + n_c - (n_b - k)) minus the k = 0 baseline.
/// Erasure: CMI from min-cut entropies S(X) = min(|X|, N_tot - |X|) on the
/// four-party pure state with |E| = k, minus the k = 0 baseline.
double page_prediction(size_t n_a, size_t n_b, size_t n_c, size_t k, Channel channel);

struct CrossSection {
  size_t depth = 0;
  std::vector<SweepCell> curve;            // delta_i(k) at this depth
  std::optional<double> log_slope;         // slope of ln(delta_i) vs k below the peak
};

/// delta_i(k) curves at the given depths plus log-scale slope estimates over
/// the sub-peak region.
std::vector<CrossSection> cross_sections(const SweepConfig& cfg, const std::vector<size_t>& depths);

struct CriticalDepth {
  bool found = false;
  double t_interpolated = 0;   // first upward crossing of epsilon, linear interp
  double t_extrapolated = 0;   // linear segment above epsilon extrapolated to 0
};

/// Threshold crossing of a delta_i(t) curve at epsilon bits (default 0.5).
CriticalDepth extract_critical_depth(const std::vector<double>& depths,
                                     const std::vector<double>& delta_i, double epsilon = 0.5);

enum class ScalingModel { kLog, kPower };

struct ScalingFit {
  ScalingModel model = ScalingModel::kLog;
  std::vector<double> n;    // abscissae (e.g. N_B)
  std::vector<double> t_c;
  double a = 0, b = 0;      // log: t_c = a + b ln n; power: t_c = a * n^b
  double r_squared = 0;
};

/// Least squares in transformed coordinates (semilog-x for log model, log-log
/// for power model). Requires >= 4 points.
ScalingFit fit_scaling(const std::vector<double>& n, const std::vector<double>& t_c,
                       ScalingModel model);

}  // namespace cmikit
