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

#include "cmikit/circuits.hpp"

using namespace cmikit;

namespace {

SweepConfig small_config() {
  SweepConfig cfg;
  cfg.n_a = 3;
  cfg.n_b = 8;
  cfg.n_c = 3;
  cfg.depths = {2, 4, 6};
  cfg.ks = {0, 4, 8};
  cfg.seeds = 5;
  cfg.master_seed = 11;
  return cfg;
}

}  // namespace

TEST_CASE("brickwork alternates even and odd bonds") {
  Rng rng(1);
  const auto gates = build_brickwork(6, 2, rng);
  // layer 0: (0,1)(2,3)(4,5); layer 1: (1,2)(3,4)
  REQUIRE(gates.size() == 5);
  CHECK(gates[0].a == 0);
  CHECK(gates[2].b == 5);
  CHECK(gates[3].a == 1);
  CHECK(gates[4].a == 3);
}

TEST_CASE("sweep is deterministic and cell-addressable") {
  const SweepConfig cfg = small_config();
  const SweepGrid g1 = run_sweep(cfg);
  const SweepGrid g2 = run_sweep(cfg);
  REQUIRE(g1.cells.size() == 9);
  for (size_t i = 0; i < g1.cells.size(); ++i) {
    CHECK(g1.cells[i].delta_i_mean == g2.cells[i].delta_i_mean);
    CHECK(g1.cells[i].delta_i_stderr == g2.cells[i].delta_i_stderr);
  }
  // Single-cell evaluation reproduces the aggregate.
  double sum = 0;
  for (size_t r = 0; r < cfg.seeds; ++r) sum += sweep_cell_delta_i(cfg, 4, 4, r);
  CHECK(g1.at(1, 1).delta_i_mean == doctest::Approx(sum / cfg.seeds).epsilon(1e-12));
}

TEST_CASE("cell reports match the scalar path and the bound") {
  const SweepConfig cfg = small_config();
  for (size_t r = 0; r < 3; ++r) {
    const CellReports rep = sweep_cell_reports(cfg, 4, 4, r);
    CHECK(rep.delta_i == sweep_cell_delta_i(cfg, 4, 4, r));
    CHECK(rep.delta_i == doctest::Approx(rep.after.cmi - rep.before.cmi));
    CHECK(rep.bound - rep.delta_i >= -1e-9);
  }
}

TEST_CASE("k = 0 cells are exactly zero") {
  const SweepGrid g = run_sweep(small_config());
  for (size_t di = 0; di < 3; ++di) {
    CHECK(g.at(di, 0).delta_i_mean == 0.0);
    CHECK(g.at(di, 0).delta_i_stderr == 0.0);
  }
}

TEST_CASE("page prediction closed forms") {
  // measurement: excess over the k = 0 baseline
  CHECK(page_prediction(20, 100, 20, 0, Channel::kMeasurement) == 0.0);
  CHECK(page_prediction(20, 100, 20, 60, Channel::kMeasurement) == 0.0);
  CHECK(page_prediction(20, 100, 20, 61, Channel::kMeasurement) == 1.0);
  CHECK(page_prediction(20, 100, 20, 100, Channel::kMeasurement) == 40.0);
  // erasure: min-cut window 30 < k < 70 for (20, 100, 20)
  CHECK(page_prediction(20, 100, 20, 30, Channel::kErasure) == 0.0);
  CHECK(page_prediction(20, 100, 20, 50, Channel::kErasure) == 40.0);
  CHECK(page_prediction(20, 100, 20, 70, Channel::kErasure) == 0.0);
  CHECK(page_prediction(20, 100, 20, 40, Channel::kErasure) > 0.0);
  CHECK_THROWS_AS(page_prediction(2, 4, 2, 5, Channel::kErasure), std::invalid_argument);
}

TEST_CASE("critical depth extraction on synthetic curves") {
  const std::vector<double> t{2, 4, 6, 8, 10};
  const std::vector<double> d{0.0, 0.0, 0.25, 0.75, 1.5};
  const CriticalDepth cd = extract_critical_depth(t, d, 0.5);
  CHECK(cd.found);
  CHECK(cd.t_interpolated == doctest::Approx(7.0));
  CHECK(cd.t_extrapolated == doctest::Approx(5.0));
  const CriticalDepth none = extract_critical_depth(t, {0, 0, 0, 0, 0}, 0.5);
  CHECK(!none.found);
}

TEST_CASE("scaling fits recover synthetic parameters exactly") {
  const std::vector<double> n{10, 20, 40, 80, 160};
  std::vector<double> log_t, pow_t;
  for (double x : n) {
    log_t.push_back(3.0 + 2.0 * std::log(x));
    pow_t.push_back(0.8 * std::pow(x, 0.5));
  }
  const ScalingFit lf = fit_scaling(n, log_t, ScalingModel::kLog);
  CHECK(lf.a == doctest::Approx(3.0));
  CHECK(lf.b == doctest::Approx(2.0));
  CHECK(lf.r_squared == doctest::Approx(1.0));
  const ScalingFit pf = fit_scaling(n, pow_t, ScalingModel::kPower);
  CHECK(pf.a == doctest::Approx(0.8));
  CHECK(pf.b == doctest::Approx(0.5));
  CHECK(pf.r_squared == doctest::Approx(1.0));
  CHECK_THROWS_AS(fit_scaling({1, 2, 3}, {1, 2, 3}, ScalingModel::kLog),
                  std::invalid_argument);
}

TEST_CASE("config validation") {
  SweepConfig cfg = small_config();
  cfg.ks = {9};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = small_config();
  cfg.depths.clear();
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("channel names round trip") {
  CHECK(channel_from_name(channel_name(Channel::kMeasurement)) == Channel::kMeasurement);
  CHECK(channel_from_name(channel_name(Channel::kErasure)) == Channel::kErasure);
  CHECK_THROWS_AS(channel_from_name("bogus"), std::invalid_argument);
}
