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

#include "cmikit/protocols.hpp"

using namespace cmikit;

TEST_CASE("every named scenario passes its own contract") {
  for (const std::string& name : scenario_names()) {
    CAPTURE(name);
    const ScenarioResult res = run_scenario(name, 1);
    for (const CheckItem& c : res.checks) {
      CAPTURE(c.name);
      CHECK(c.pass());
    }
    CHECK(res.all_pass());
  }
}

TEST_CASE("unknown scenario raises") {
  CHECK_THROWS_AS(run_scenario("no-such", 1), std::invalid_argument);
}

TEST_CASE("bell teleportation specifics") {
  const ScenarioResult res = bell_teleportation();
  CHECK(res.delta_i == doctest::Approx(2.0));
  CHECK(res.ensemble.p.size() == 4);
  for (double p : res.ensemble.p) CHECK(p == doctest::Approx(0.25));
  CHECK(orthogonality_report(res.ensemble) <= 1e-10);
}

TEST_CASE("classical scenarios bracket the chain rule") {
  CHECK(classical_parity_example().all_pass());
  CHECK(classical_redundancy_example().all_pass());
}

TEST_CASE("mixed measurement counterexample has identical branches") {
  const ScenarioResult res = mixed_measurement_counterexample();
  CHECK(res.delta_i == doctest::Approx(1.0));
  REQUIRE(res.ensemble.states.size() >= 2);
  // Branch states are the same density matrix: overlap = purity, no
  // orthogonality whatsoever.
  const double o = res.ensemble.states[0].overlap(res.ensemble.states[1]);
  const double purity =
      (res.ensemble.states[0].matrix() * res.ensemble.states[0].matrix()).trace().real();
  CHECK(o == doctest::Approx(purity).epsilon(1e-9));
}

TEST_CASE("efficient eraser rejects unrealizable block sizes") {
  Rng rng(3);
  CHECK_THROWS_AS(efficient_eraser(1, 1, rng), std::invalid_argument);
}

TEST_CASE("efficient eraser census counts all of B") {
  Rng rng(5);
  Partition part;
  const CliffordTableau t = efficient_eraser_state(2, 2, rng, &part);
  CHECK(max_erasable_census(t, part) == part.B.size());
}
