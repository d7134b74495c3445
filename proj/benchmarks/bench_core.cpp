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

#include <benchmark/benchmark.h>

#include "cmikit/circuits.hpp"
#include "cmikit/statmech.hpp"

using namespace cmikit;

static void BM_BrickworkLayer(benchmark::State& state) {
  const size_t n = size_t(state.range(0));
  Rng rng(1);
  CliffordTableau t(n);
  const auto gates = build_brickwork(n, 2, rng);
  for (auto _ : state) {
    for (const BrickworkGate& g : gates) g.u.apply_to(t, {int(g.a), int(g.b)});
  }
  state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(gates.size()));
}
BENCHMARK(BM_BrickworkLayer)->Arg(64)->Arg(256)->Arg(1024);

static void BM_SubsystemEntropy(benchmark::State& state) {
  const size_t n = size_t(state.range(0));
  Rng rng(2);
  const CliffordTableau t = random_stabilizer_state(n, rng);
  std::vector<int> half;
  for (size_t q = 0; q < n / 2; ++q) half.push_back(int(q));
  for (auto _ : state) benchmark::DoNotOptimize(t.subsystem_entropy(half));
}
BENCHMARK(BM_SubsystemEntropy)->Arg(64)->Arg(256)->Arg(1024);

static void BM_BitMatrixRank(benchmark::State& state) {
  const size_t n = size_t(state.range(0));
  Rng rng(3);
  BitMatrix m(n, 2 * n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < 2 * n; ++c)
      if (rng.bit()) m.set(r, c, true);
  for (auto _ : state) {
    BitMatrix copy = m;
    benchmark::DoNotOptimize(copy.eliminate());
  }
}
BENCHMARK(BM_BitMatrixRank)->Arg(128)->Arg(512)->Arg(2048);

static void BM_SweepCell(benchmark::State& state) {
  SweepConfig cfg;
  cfg.n_a = 8;
  cfg.n_b = size_t(state.range(0));
  cfg.n_c = 8;
  cfg.depths = {8};
  cfg.ks = {cfg.n_b / 2};
  size_t rep = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(sweep_cell_delta_i(cfg, 8, cfg.n_b / 2, rep++));
}
BENCHMARK(BM_SweepCell)->Arg(32)->Arg(128);

static void BM_MeasurePauli(benchmark::State& state) {
  const size_t n = size_t(state.range(0));
  Rng rng(5);
  CliffordTableau t = random_stabilizer_state(n, rng);
  size_t q = 0;
  for (auto _ : state) {
    const PauliString z = PauliString::single(n, q % n, 'Z');
    benchmark::DoNotOptimize(t.measure_pauli(z, rng));
    ++q;
  }
}
BENCHMARK(BM_MeasurePauli)->Arg(64)->Arg(256)->Arg(1024);

static void BM_MeanFieldLandscape(benchmark::State& state) {
  std::vector<double> js, hbs;
  for (int i = 0; i <= 40; ++i) js.push_back(0.25 * i);
  for (int i = 0; i <= 20; ++i) hbs.push_back(double(i));
  for (auto _ : state) benchmark::DoNotOptimize(mf_landscape(js, hbs, 4));
}
BENCHMARK(BM_MeanFieldLandscape);

BENCHMARK_MAIN();
