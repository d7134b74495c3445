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

#include "cmikit/protocols.hpp"

#include <cmath>
#include <stdexcept>

namespace cmikit {

namespace {

ScenarioResult classical_discard_example(const std::string& name, const std::vector<double>& probs,
                                         double cmi_before, double cmi_after) {
  ScenarioResult r;
  r.name = name;
  const Partition part{{0}, {1}, {2}, {}, {}};
  DensityMatrix rho = DensityMatrix::diagonal(3, probs);
  MixedDenseEntropy before_src(rho);
  r.before = entropy_report(before_src, part);

  DensityMatrix after = erase_qubits(rho, part.B);
  MixedDenseEntropy after_src(after);
  r.after = entropy_report(after_src, part);
  r.delta_i = delta_I(r.before, r.after);
  r.bound = 2.0 * r.after.s_abc;

  r.add_check("cmi_before", cmi_before, r.before.cmi, 1e-9);
  r.add_check("cmi_after", cmi_after, r.after.cmi, 1e-9);
  r.add_check("cmi_nonnegative_before", std::abs(r.before.cmi), r.before.cmi, 1e-9);
  r.add_check("cmi_nonnegative_after", std::abs(r.after.cmi), r.after.cmi, 1e-9);
  r.add_check("generic_bound_margin_nonnegative", std::abs(r.bound - r.delta_i),
              r.bound - r.delta_i, 1e-9);
  return r;
}

/// Two Bell pairs (0,1) and (2,3).
DenseState two_bell_pairs() {
  CVec amp = CVec::Zero(16);
  for (size_t i : {0u, 3u, 12u, 15u}) amp[i] = 0.5;
  return DenseState(4, std::move(amp));
}

void make_bell(CliffordTableau& t, size_t p, size_t q) {
  t.apply_gate(Gate::H, p);
  t.apply_gate(Gate::CNOT, p, q);
}

double erase_delta_i(const TableauEntropy& src, const Partition& part,
                     const std::vector<int>& qubits) {
  Partition after = part;
  for (int q : qubits) after.erase_from_b(q);
  return cmi(src, after) - cmi(src, part);
}

}  // namespace

ScenarioResult classical_parity_example() {
  std::vector<double> probs(8, 0.0);
  for (size_t i : {0u, 3u, 5u, 6u}) probs[i] = 0.25;  // even parity
  return classical_discard_example("classical-parity", probs, 1.0, 0.0);
}

ScenarioResult classical_redundancy_example() {
  std::vector<double> probs(8, 0.0);
  probs[0] = probs[7] = 0.5;
  return classical_discard_example("classical-redundancy", probs, 0.0, 1.0);
}

ScenarioResult bell_teleportation() {
  ScenarioResult r;
  r.name = "bell-teleportation";
  const Partition part{{0}, {1, 2}, {3}, {}, {}};
  const DenseState psi = two_bell_pairs();
  PureDenseEntropy before_src(psi);
  r.before = entropy_report(before_src, part);

  const DensityMatrix rho = psi.density();
  const auto inst = QuantumInstrument::bell_measurement(1, 2);
  const auto res = apply_instrument(rho, inst);
  const auto ext = extend_with_register(rho, inst, part);
  MixedDenseEntropy after_src(ext.rho);
  r.after = entropy_report(after_src, ext.part);
  r.delta_i = delta_I(r.before, r.after);
  r.bound = res.dist.shannon_bits;

  const std::vector<int> ac = {0, 3};
  for (size_t i = 0; i < res.p.size(); ++i) {
    r.ensemble.p.push_back(res.p[i]);
    r.ensemble.states.push_back(res.states[i].partial_trace(ac));
  }

  r.add_check("delta_i", 2.0, r.delta_i, 1e-9);
  r.add_check("shannon_bits", 2.0, res.dist.shannon_bits, 1e-9);
  for (size_t i = 0; i < res.p.size(); ++i) {
    r.add_check("p_" + std::to_string(i), 0.25, res.p[i], 1e-9);
  }
  r.add_check("orthogonality", 0.0, orthogonality_report(r.ensemble), 1e-10);
  const auto mb = check_measurement_bound(r.delta_i, res.dist, r.after.s_abc);
  r.add_check("measurement_margin", 0.0, mb.margin, 1e-9);
  r.add_check("purity_gap", 0.0, mb.purity_gap, 1e-9);
  const auto bs = bell_structure_check(r.ensemble, 1, 1, res.dist.shannon_bits);
  r.add_check("bell_structure", 1.0, bs.all_pass() ? 1.0 : 0.0, 0.0);
  r.add_check("block_dim", 1.0, double(bs.expected_dim), 0.0);
  return r;
}

ScenarioResult saturating_erasure_example(Rng& rng) {
  // Single-qubit A and C cannot reach delta_i = 2 S(E) with S(E) = 1: the
  // required marginals force three maximal two-qubit cuts through the erased
  // qubit, which no state provides. Two-qubit blocks admit exact saturation,
  // so the filter samples 8-qubit states with A = {0,1}, B = {2..5}, C = {6,7}.
  constexpr int kMaxTries = 20000;
  for (int tries = 0; tries < kMaxTries; ++tries) {
    CliffordTableau t = random_stabilizer_state(8, rng);
    TableauEntropy src(t);
    const Partition part{{0, 1}, {2, 3, 4, 5}, {6, 7}, {}, {}};
    if (t.subsystem_entropy({0, 1}) != 2 || t.subsystem_entropy({6, 7}) != 2 ||
        t.subsystem_entropy({0, 1, 6, 7}) != 4) {
      continue;
    }
    Partition after_part = part;
    after_part.erase_from_b(2);
    if (t.subsystem_entropy({2}) != 1) continue;
    const double after_cmi = cmi(src, after_part);
    if (after_cmi != 2.0) continue;
    const auto dec = decoupling_report(src, after_part);
    if (dec.i_ae != 0.0 || dec.i_be != 0.0 || dec.i_ce != 0.0) continue;

    ScenarioResult r;
    r.name = "saturating-erasure";
    r.before = entropy_report(src, part);
    r.after = entropy_report(src, after_part);
    r.delta_i = delta_I(r.before, r.after);
    r.bound = 2.0 * r.after.s_e;
    r.add_check("delta_i", 2.0, r.delta_i, 0.0);
    r.add_check("s_e", 1.0, r.after.s_e, 0.0);
    r.add_check("i_ae", 0.0, dec.i_ae, 0.0);
    r.add_check("i_be", 0.0, dec.i_be, 0.0);
    r.add_check("i_ce", 0.0, dec.i_ce, 0.0);
    r.add_check("bound_margin", 0.0, r.bound - r.delta_i, 0.0);
    r.add_check("decoupling_identity", r.delta_i, dec.implied_delta_i(), 0.0);
    return r;
  }
  throw std::runtime_error("saturating erasure filter exhausted retries");
}

ScenarioResult mixed_erasure_counterexample(Rng& rng) {
  constexpr int kMaxTries = 500000;
  const Partition part{{0}, {1, 2, 3}, {4}, {}, {5}};
  for (int tries = 0; tries < kMaxTries; ++tries) {
    CliffordTableau t = random_stabilizer_state(6, rng);
    if (t.subsystem_entropy({1, 2, 3}) != 3) continue;
    if (t.subsystem_entropy({0, 1, 2, 3}) != 2) continue;
    if (t.subsystem_entropy({1, 2, 3, 4}) != 2) continue;
    if (t.subsystem_entropy({0, 1, 2, 3, 4}) != 1) continue;
    TableauEntropy src(t);
    Partition after_part = part;
    after_part.erase_from_b(1);
    if (cmi(src, after_part) != 2.0) continue;
    // The erased qubit must carry one full bit of entropy (delta_i = 2 S(E))
    // and the post-erasure state keeps S(AB'C) = 2.
    if (t.subsystem_entropy({1}) != 1) continue;
    if (t.subsystem_entropy({0, 2, 3, 4}) != 2) continue;

    const DenseState psi = stabilizer_to_dense(t);
    const auto inst = QuantumInstrument::computational_measurement({1});
    const auto res = apply_instrument(psi.density(), inst);
    if (res.p.size() != 2 || std::abs(res.p[0] - 0.5) > 1e-9) continue;
    PostSelectionEnsemble ens;
    bool mixed = true;
    for (size_t i = 0; i < 2; ++i) {
      auto ac = res.states[i].partial_trace({0, 4});
      if ((ac.matrix() - CMat::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff() > 1e-9) mixed = false;
      ens.p.push_back(res.p[i]);
      ens.states.push_back(std::move(ac));
    }
    if (!mixed) continue;

    ScenarioResult r;
    r.name = "mixed-erasure-counterexample";
    r.before = entropy_report(src, part);
    r.after = entropy_report(src, after_part);
    r.delta_i = delta_I(r.before, r.after);
    r.bound = 2.0 * r.after.s_e;
    r.ensemble = std::move(ens);
    r.add_check("cmi_before", 0.0, r.before.cmi, 0.0);
    r.add_check("cmi_after", 2.0, r.after.cmi, 0.0);
    r.add_check("delta_i", 2.0, r.delta_i, 0.0);
    r.add_check("bound_margin", 0.0, r.bound - r.delta_i, 0.0);
    r.add_check("overlap", 0.25, orthogonality_report(r.ensemble), 1e-9);
    return r;
  }
  throw std::runtime_error("mixed erasure filter exhausted retries");
}

ScenarioResult mixed_measurement_counterexample() {
  ScenarioResult r;
  r.name = "mixed-measurement-counterexample";
  const Partition part{{0}, {1}, {2}, {}, {}};
  std::vector<double> probs(8, 0.0);
  probs[0] = probs[7] = 0.5;  // classical GHZ
  const DensityMatrix rho = DensityMatrix::diagonal(3, probs);
  MixedDenseEntropy before_src(rho);
  r.before = entropy_report(before_src, part);

  const auto inst = QuantumInstrument::pauli_measurement(PauliString::from_string("IXI"));
  const auto res = apply_instrument(rho, inst);
  const auto ext = extend_with_register(rho, inst, part);
  MixedDenseEntropy after_src(ext.rho);
  r.after = entropy_report(after_src, ext.part);
  r.delta_i = delta_I(r.before, r.after);
  r.bound = res.dist.shannon_bits;

  const std::vector<int> ac = {0, 2};
  for (size_t i = 0; i < res.p.size(); ++i) {
    r.ensemble.p.push_back(res.p[i]);
    r.ensemble.states.push_back(res.states[i].partial_trace(ac));
  }
  r.add_check("cmi_before", 0.0, r.before.cmi, 1e-9);
  r.add_check("delta_i", 1.0, r.delta_i, 1e-9);
  r.add_check("p_0", 0.5, res.p[0], 1e-12);
  r.add_check("p_1", 0.5, res.p[1], 1e-12);
  const double branch_dist =
      (r.ensemble.states[0].matrix() - r.ensemble.states[1].matrix()).cwiseAbs().maxCoeff();
  r.add_check("identical_branches", 0.0, branch_dist, 1e-12);
  r.add_check("measurement_margin", 0.0, r.bound - r.delta_i, 1e-9);
  return r;
}

CliffordTableau efficient_eraser_state(size_t n_a, size_t n_c, Rng& rng, Partition* part_out) {
  if (n_a < 1 || n_c < 1) throw std::invalid_argument("block sizes must be >= 1");
  // n_a = n_c = 1 is unrealizable: every single-B-qubit erasure saturating
  // delta_i = 2 would require a 4-qubit state with all three balanced cuts
  // maximal, which does not exist.
  if (n_a + n_c < 3) throw std::invalid_argument("n_a + n_c must be >= 3");
  const size_t nac = n_a + n_c;
  const size_t n = 2 * nac;
  Partition part;
  for (size_t i = 0; i < n_a; ++i) part.A.push_back(static_cast<int>(i));
  for (size_t i = 0; i < n_c; ++i) part.C.push_back(static_cast<int>(n_a + i));
  for (size_t i = 0; i < nac; ++i) part.B.push_back(static_cast<int>(nac + i));

  constexpr int kMaxTries = 500;
  for (int tries = 0; tries < kMaxTries; ++tries) {
    CliffordTableau t(n);
    for (size_t i = 0; i < n_a; ++i) make_bell(t, i, nac + i);
    for (size_t i = 0; i < n_c; ++i) make_bell(t, n_a + i, nac + n_a + i);
    CliffordUnitary u = CliffordUnitary::random(nac, rng);
    std::vector<int> ac = part.A;
    ac.insert(ac.end(), part.C.begin(), part.C.end());
    u.apply_to(t, ac);

    TableauEntropy src(t);
    bool all_max = true;
    for (int b : part.B) {
      if (erase_delta_i(src, part, {b}) != 2.0) {
        all_max = false;
        break;
      }
    }
    if (!all_max) continue;
    if (part_out) *part_out = part;
    return t;
  }
  throw std::runtime_error("efficient eraser resampling exhausted retries");
}

ScenarioResult efficient_eraser(size_t n_a, size_t n_c, Rng& rng) {
  ScenarioResult r;
  r.name = "efficient-eraser";
  Partition part;
  const CliffordTableau t = efficient_eraser_state(n_a, n_c, rng, &part);
  TableauEntropy src(t);
  r.before = entropy_report(src, part);

  for (int b : part.B) {
    r.add_check("erase_b" + std::to_string(b), 2.0, erase_delta_i(src, part, {b}), 0.0);
  }
  Partition all_erased = part;
  for (int b : part.B) all_erased.erase_from_b(b);
  r.after = entropy_report(src, all_erased);
  r.add_check("cmi_all_erased", 0.0, r.after.cmi, 0.0);
  r.delta_i = delta_I(r.before, r.after);
  r.bound = 2.0 * double(std::min(n_a, n_c));

  const size_t joint = std::min(n_a, n_c);
  std::vector<int> chosen(part.B.begin(), part.B.begin() + joint);
  const double joint_delta = erase_delta_i(src, part, chosen);
  r.add_check("joint_cap_respected", joint_delta,
              std::min(joint_delta, 2.0 * double(joint)), 1e-9);
  r.add_check("census", double(n_a + n_c), double(max_erasable_census(t, part)), 0.0);
  return r;
}

size_t max_erasable_census(const CliffordTableau& t, const Partition& part) {
  TableauEntropy src(t);
  size_t count = 0;
  for (int b : part.B) {
    const int s_e = t.subsystem_entropy({b});
    if (s_e <= 0) continue;
    if (erase_delta_i(src, part, {b}) == 2.0 * s_e) ++count;
  }
  return count;
}

std::vector<std::string> scenario_names() {
  return {"classical-parity",
          "classical-redundancy",
          "bell-teleportation",
          "saturating-erasure",
          "mixed-erasure-counterexample",
          "mixed-measurement-counterexample",
          "efficient-eraser"};
}

ScenarioResult run_scenario(const std::string& name, uint64_t seed) {
  Rng rng(seed);
  if (name == "classical-parity") return classical_parity_example();
  if (name == "classical-redundancy") return classical_redundancy_example();
  if (name == "bell-teleportation") return bell_teleportation();
  if (name == "saturating-erasure") return saturating_erasure_example(rng);
  if (name == "mixed-erasure-counterexample") return mixed_erasure_counterexample(rng);
  if (name == "mixed-measurement-counterexample") return mixed_measurement_counterexample();
  if (name == "efficient-eraser") return efficient_eraser(2, 2, rng);
  throw std::invalid_argument("unknown scenario: " + name);
}

}  // namespace cmikit
