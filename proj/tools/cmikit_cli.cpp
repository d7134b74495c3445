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

#include <cstdio>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cmikit/circuits.hpp"
#include "cmikit/harness.hpp"
#include "cmikit/protocols.hpp"
#include "cmikit/statmech.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitExperimentFail = 1;
constexpr int kExitUsage = 2;

int cmd_demo(const std::string& name, uint64_t seed) {
  cmikit::ScenarioResult res;
  try {
    res = cmikit::run_scenario(name, seed);
  } catch (const std::invalid_argument&) {
    std::fprintf(stderr, "unknown scenario '%s'; valid names:\n", name.c_str());
    for (const std::string& s : cmikit::scenario_names())
      std::fprintf(stderr, "  %s\n", s.c_str());
    return kExitUsage;
  }
  std::printf("scenario: %s\n", res.name.c_str());
  std::printf("delta_i = %.6f (bound %.6f)\n", res.delta_i, res.bound);
  std::printf("%-32s %12s %12s  %s\n", "check", "expected", "computed", "status");
  for (const cmikit::CheckItem& c : res.checks) {
    std::printf("%-32s %12.6f %12.6f  %s\n", c.name.c_str(), c.expected, c.actual,
                c.pass() ? "pass" : "FAIL");
  }
  return res.all_pass() ? kExitPass : kExitExperimentFail;
}

int cmd_sweep(const std::string& config_path) {
  cmikit::ExperimentConfig cfg;
  try {
    cfg = cmikit::load_config(config_path);
    cfg.sweep.validate();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitUsage;
  }
  const std::string stem = cfg.output.empty() ? "sweep" : cfg.output;
  const std::string jsonl_path = stem + ".jsonl";
  const std::string csv_path = stem + ".csv";

  std::vector<cmikit::ExperimentRecord> existing;
  if (std::filesystem::exists(jsonl_path)) {
    const cmikit::JsonlReadReport rr = cmikit::read_records(jsonl_path);
    existing = rr.records;
    for (size_t idx : rr.corrupt_rows)
      std::fprintf(stderr, "warning: corrupt record at %s line %zu (recomputing)\n",
                   jsonl_path.c_str(), idx + 1);
  }
  const cmikit::SweepRunResult res = cmikit::run_sweep_experiment(cfg, existing);
  cmikit::write_records(jsonl_path, res.records);
  cmikit::write_sweep_csv(csv_path, res.grid);
  std::printf("wrote %zu records (%zu reused) to %s\n", res.records.size(), res.reused,
              jsonl_path.c_str());
  std::printf("wrote %zu-cell grid to %s\n", res.grid.cells.size(), csv_path.c_str());
  return kExitPass;
}

int cmd_fit(const std::string& csv_path, const std::string& model_name) {
  std::vector<double> n_b, t_c;
  cmikit::ScalingFit fit;
  try {
    cmikit::read_scaling_csv(csv_path, n_b, t_c);
    const cmikit::ScalingModel model = model_name == "power"
                                           ? cmikit::ScalingModel::kPower
                                           : cmikit::ScalingModel::kLog;
    fit = cmikit::fit_scaling(n_b, t_c, model);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "fit error: %s\n", e.what());
    return kExitUsage;
  }

  // Residuals and the slope's 95% interval in transformed coordinates.
  std::vector<double> residuals;
  double sxx = 0, xbar = 0, ss_res = 0;
  std::vector<double> xs(n_b.size());
  for (size_t i = 0; i < n_b.size(); ++i) xs[i] = std::log(n_b[i]);
  for (double x : xs) xbar += x;
  xbar /= static_cast<double>(xs.size());
  for (size_t i = 0; i < n_b.size(); ++i) {
    const double pred = fit.model == cmikit::ScalingModel::kPower
                            ? fit.a * std::pow(n_b[i], fit.b)
                            : fit.a + fit.b * std::log(n_b[i]);
    residuals.push_back(t_c[i] - pred);
    const double y = fit.model == cmikit::ScalingModel::kPower ? std::log(t_c[i]) : t_c[i];
    const double yfit = fit.model == cmikit::ScalingModel::kPower
                            ? std::log(fit.a) + fit.b * xs[i]
                            : fit.a + fit.b * xs[i];
    ss_res += (y - yfit) * (y - yfit);
    sxx += (xs[i] - xbar) * (xs[i] - xbar);
  }
  const double dof = static_cast<double>(n_b.size()) - 2.0;
  const double b_stderr = dof > 0 && sxx > 0 ? std::sqrt(ss_res / dof / sxx) : 0.0;

  nlohmann::json out{{"model", fit.model == cmikit::ScalingModel::kPower ? "power" : "log"},
                     {"a", fit.a},
                     {"b", fit.b},
                     {"b_stderr", b_stderr},
                     {"b_ci95", {fit.b - 1.96 * b_stderr, fit.b + 1.96 * b_stderr}},
                     {"r_squared", fit.r_squared},
                     {"residuals", residuals}};
  std::printf("%s\n", out.dump(2).c_str());
  return kExitPass;
}

int cmd_mf(const std::string& config_path) {
  cmikit::ExperimentConfig cfg;
  try {
    cfg = cmikit::load_config(config_path);
    if (cfg.meanfield.couplings.empty() || cfg.meanfield.h_b.empty())
      throw std::invalid_argument("meanfield section needs couplings and h_b grids");
  } catch (const std::exception& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitUsage;
  }
  const cmikit::MeanFieldLandscape l =
      cmikit::mf_landscape(cfg.meanfield.couplings, cfg.meanfield.h_b, cfg.meanfield.h_ac);
  const std::string csv_path = (cfg.output.empty() ? "meanfield" : cfg.output) + ".csv";
  cmikit::write_landscape_csv(csv_path, l);
  std::printf("wrote %zux%zu landscape to %s\n", l.couplings.size(), l.h_b.size(),
              csv_path.c_str());
  if (l.couplings.size() >= 3) {
    std::printf("h_B = 0 crossover coupling: %.4f\n",
                cmikit::mf_crossover_coupling(l.couplings, cfg.meanfield.h_ac, 0.0));
    for (double h : l.h_b)
      std::printf("onset(h_B = %.2f) = %.4f\n", h,
                  cmikit::mf_onset_coupling(l.couplings, cfg.meanfield.h_ac, h));
  }
  return kExitPass;
}

int cmd_emit_plot_data(const std::string& jsonl_path) {
  cmikit::JsonlReadReport rr;
  try {
    rr = cmikit::read_records(jsonl_path);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "read error: %s\n", e.what());
    return kExitUsage;
  }
  for (size_t idx : rr.corrupt_rows)
    std::fprintf(stderr, "corrupt record at line %zu\n", idx + 1);

  // Aggregate per (t, k), emitted as the sweep CSV schema on stdout.
  std::map<std::pair<long long, long long>, std::pair<double, size_t>> agg;
  for (const cmikit::ExperimentRecord& r : rr.records) {
    const auto t_it = r.params.find("t");
    const auto k_it = r.params.find("k");
    if (t_it == r.params.end() || k_it == r.params.end()) continue;
    auto& slot = agg[{static_cast<long long>(t_it->second), static_cast<long long>(k_it->second)}];
    slot.first += r.delta_i;
    slot.second += 1;
  }
  std::printf("depth,k,n_samples,delta_i_mean\n");
  for (const auto& [tk, sum_n] : agg)
    std::printf("%lld,%lld,%zu,%.12g\n", tk.first, tk.second, sum_n.second,
                sum_n.first / static_cast<double>(sum_n.second));
  return rr.corrupt_rows.empty() ? kExitPass : kExitExperimentFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conditional mutual information dynamics toolkit"};
  app.require_subcommand(1);

  std::string demo_name;
  uint64_t demo_seed = 1;
  CLI::App* demo = app.add_subcommand("demo", "run a named scenario and check its contract");
  demo->add_option("scenario", demo_name, "scenario name")->required();
  demo->add_option("--seed", demo_seed, "master seed");

  std::string sweep_config;
  CLI::App* sweep = app.add_subcommand("sweep", "run a circuit sweep from a JSON config");
  sweep->add_option("config", sweep_config, "config file")->required();

  std::string fit_csv, fit_model = "log";
  CLI::App* fit = app.add_subcommand("fit", "fit a critical-depth scaling model");
  fit->add_option("csv", fit_csv, "CSV with n_b,t_c columns")->required();
  fit->add_option("--model", fit_model, "scaling model")
      ->check(CLI::IsMember({"log", "power"}));

  std::string mf_config;
  CLI::App* mf = app.add_subcommand("mf", "evaluate the mean-field landscape");
  mf->add_option("config", mf_config, "config file")->required();

  std::string plot_jsonl;
  CLI::App* plot = app.add_subcommand("emit-plot-data", "aggregate a JSONL record file");
  plot->add_option("jsonl", plot_jsonl, "records file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (demo->parsed()) return cmd_demo(demo_name, demo_seed);
    if (sweep->parsed()) return cmd_sweep(sweep_config);
    if (fit->parsed()) return cmd_fit(fit_csv, fit_model);
    if (mf->parsed()) return cmd_mf(mf_config);
    if (plot->parsed()) return cmd_emit_plot_data(plot_jsonl);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitExperimentFail;
  }
  return kExitUsage;
}
