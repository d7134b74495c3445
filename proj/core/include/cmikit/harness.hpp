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
#include <map>
#include <string>
#include <vector>

#include "cmikit/circuits.hpp"
#include "cmikit/infotheory.hpp"
#include "cmikit/statmech.hpp"

namespace cmikit {

inline constexpr const char* kToolkitVersion = "0.1.0";

/// Keyed 64-bit hash of a canonical task key such as "sweep|t=4|k=10|r=0".
/// Stable across platforms; same inputs always give the same seed.
uint64_t derive_seed(uint64_t master_seed, const std::string& task_key);

/// Canonical task key for a sweep cell-replicate.
std::string sweep_task_key(const std::string& experiment, size_t depth, size_t k,
                           size_t replicate);

struct ScalingSection {
  std::vector<size_t> n_b;         // N_B grid; n_a, n_c, depths, ks from sweep
  double epsilon = 0.5;            // critical-depth threshold in bits
  ScalingModel model = ScalingModel::kLog;
};

struct MeanFieldSection {
  std::vector<double> couplings;
  std::vector<double> h_b;
  double h_ac = 0;
};

/// Experiment description; serializes to JSON losslessly, unknown keys are
/// rejected on load.
struct ExperimentConfig {
  std::string experiment;          // scenario name | sweep | scaling | meanfield
  uint64_t master_seed = 1;
  size_t workers = 0;              // 0 = auto; env CMIKIT_WORKERS overrides
  std::string output;              // output path stem
  SweepConfig sweep;               // used by sweep and scaling experiments
  ScalingSection scaling;
  MeanFieldSection meanfield;
};

std::string config_to_json(const ExperimentConfig& cfg);
ExperimentConfig config_from_json(const std::string& text);
ExperimentConfig load_config(const std::string& path);

/// One cell-replicate result with flattened entropies and bound margins.
struct ExperimentRecord {
  std::string experiment;
  std::map<std::string, double> params;  // t, k, r, ...
  uint64_t seed = 0;
  EntropyReport before, after;
  double delta_i = 0;
  double bound = 0;                      // channel-specific upper bound on delta_i
  double bound_margin = 0;               // bound - delta_i, >= -1e-9
  double wall_time_s = 0;
  std::string version = kToolkitVersion;

  std::string key() const;               // canonical "experiment|t=..|k=..|r=.."
};

std::string record_to_json(const ExperimentRecord& rec);
ExperimentRecord record_from_json(const std::string& line);

struct JsonlReadReport {
  std::vector<ExperimentRecord> records;  // valid rows only
  std::vector<size_t> corrupt_rows;       // zero-based line indices
};

/// Reads a JSONL file, re-checking each record's CMI identity and bound
/// margin; rows failing parse or validation are reported by index.
JsonlReadReport read_records(const std::string& path);
void write_records(const std::string& path, std::vector<ExperimentRecord> records);

/// Bit-exact header: channel,depth,k,n_samples,delta_i_mean,delta_i_stderr
void write_sweep_csv(const std::string& path, const SweepGrid& grid);
/// Bit-exact header: n_b,t_c,estimator
void write_scaling_csv(const std::string& path, const std::vector<double>& n_b,
                       const std::vector<double>& t_c, const std::string& estimator);
/// Sweep-grid schema with columns relabeled: channel,J,h_B,n_samples,
/// delta_i_mean,delta_i_stderr (channel = "meanfield", n_samples = 1).
void write_landscape_csv(const std::string& path, const MeanFieldLandscape& l);

/// Reads a two-column CSV (n_b,t_c, extra columns ignored) for fitting.
void read_scaling_csv(const std::string& path, std::vector<double>& n_b,
                      std::vector<double>& t_c);

/// Worker count: CMIKIT_WORKERS env var, else requested, else 1.
size_t resolve_workers(size_t requested);

struct SweepRunResult {
  SweepGrid grid;
  std::vector<ExperimentRecord> records;  // sorted by key, includes reused rows
  size_t reused = 0;                      // records skipped because already on disk
};

/// Evaluates all cell-replicates of cfg.sweep over a bounded worker pool,
/// skipping any whose keys appear in `existing` (resumption). Aggregation is
/// single-threaded and output order is independent of scheduling.
SweepRunResult run_sweep_experiment(const ExperimentConfig& cfg,
                                    const std::vector<ExperimentRecord>& existing = {});

}  // namespace cmikit
