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

#include "cmikit/hayden_preskill.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cmikit/bitmatrix.hpp"

namespace cmikit {

namespace {

PauliString two_site(size_t n, int a, int b, char kind) {
  PauliString p(n);
  if (kind == 'X') {
    p.set_x(static_cast<size_t>(a), true);
    p.set_x(static_cast<size_t>(b), true);
  } else {
    p.set_z(static_cast<size_t>(a), true);
    p.set_z(static_cast<size_t>(b), true);
  }
  return p;
}

std::vector<size_t> shuffled_indices(size_t count, Rng& rng) {
  std::vector<size_t> idx(count);
  for (size_t i = 0; i < count; ++i) idx[i] = i;
  for (size_t i = count; i > 1; --i) {
    std::swap(idx[i - 1], idx[rng.below(i)]);
  }
  return idx;
}

/// Product of Bell pairs |00>+|11> across the listed qubit pairs (which must
/// cover all qubits).
DenseState bell_product_state(size_t n, const std::vector<std::pair<int, int>>& pairs) {
  const size_t np = pairs.size();
  if (2 * np != n) throw std::invalid_argument("pairs must cover all qubits");
  CVec amp = CVec::Zero(size_t{1} << n);
  const double a = std::pow(2.0, -double(np) / 2.0);
  for (size_t bits = 0; bits < (size_t{1} << np); ++bits) {
    size_t idx = 0;
    for (size_t i = 0; i < np; ++i) {
      if ((bits >> i) & 1) {
        idx |= size_t{1} << pairs[i].first;
        idx |= size_t{1} << pairs[i].second;
      }
    }
    amp[idx] = a;
  }
  return DenseState(n, std::move(amp));
}

std::vector<std::pair<int, int>> all_initial_pairs(const HpLayout& lay) {
  std::vector<std::pair<int, int>> pairs;
  const size_t na = lay.n_a, nc = lay.n_c, h = lay.h;
  for (size_t i = 0; i < na; ++i) pairs.emplace_back(lay.A[i], lay.B[i]);
  for (size_t i = 0; i < nc; ++i) pairs.emplace_back(lay.C[i], lay.B[na + 2 * h + i]);
  for (size_t i = 0; i < h; ++i) pairs.emplace_back(lay.B[na + i], lay.B[na + h + i]);
  return pairs;
}

double pure_cmi(const DenseState& psi, const Partition& part) {
  PureDenseEntropy src(psi);
  return cmi(src, part);
}

}  // namespace

Partition HpLayout::partition() const {
  Partition p;
  p.A = A;
  p.B = B;
  p.C = C;
  return p;
}

HpLayout hp_layout(size_t n_a, size_t n_b, size_t n_c) {
  if (n_a != n_c) throw std::invalid_argument("mirror layout needs n_a = n_c");
  if (n_b < n_a + n_c || ((n_b - n_a - n_c) % 2) != 0) {
    throw std::invalid_argument("n_b - n_a - n_c must be even and nonnegative");
  }
  HpLayout lay;
  lay.n_a = n_a;
  lay.n_c = n_c;
  lay.n_b = n_b;
  lay.h = (n_b - n_a - n_c) / 2;
  lay.total = n_a + n_b + n_c;
  for (size_t i = 0; i < n_a; ++i) lay.A.push_back(static_cast<int>(i));
  for (size_t i = 0; i < n_b; ++i) lay.B.push_back(static_cast<int>(n_a + i));
  for (size_t i = 0; i < n_c; ++i) lay.C.push_back(static_cast<int>(n_a + n_b + i));
  // B internal order: A partners, left internal block, right internal block,
  // C partners.
  for (size_t i = 0; i < n_a; ++i) lay.L.push_back(lay.B[i]);
  for (size_t i = 0; i < lay.h; ++i) lay.L.push_back(lay.B[n_a + i]);
  for (size_t i = 0; i < n_c; ++i) lay.R.push_back(lay.B[n_a + 2 * lay.h + i]);
  for (size_t i = 0; i < lay.h; ++i) lay.R.push_back(lay.B[n_a + lay.h + i]);
  for (size_t i = 0; i < lay.L.size(); ++i) lay.pairs.emplace_back(lay.L[i], lay.R[i]);
  return lay;
}

CliffordTableau hp_initial_state(const HpLayout& lay) {
  CliffordTableau t(lay.total);
  for (const auto& [p, q] : all_initial_pairs(lay)) {
    t.apply_gate(Gate::H, static_cast<size_t>(p));
    t.apply_gate(Gate::CNOT, static_cast<size_t>(p), static_cast<size_t>(q));
  }
  return t;
}

CliffordTableau hp_clifford_state(const HpLayout& lay, const CliffordUnitary& u) {
  if (u.num_qubits() != lay.L.size()) throw std::invalid_argument("scrambler size mismatch");
  CliffordTableau t = hp_initial_state(lay);
  u.apply_to(t, lay.L);
  u.conjugated().apply_to(t, lay.R);
  return t;
}

std::vector<double> hp_clifford_trace(size_t n_a, size_t n_b, size_t n_c, size_t max_m, Rng& rng) {
  const HpLayout lay = hp_layout(n_a, n_b, n_c);
  if (max_m > lay.pairs.size()) throw std::invalid_argument("more measurements than pairs");
  const CliffordUnitary u = CliffordUnitary::random(lay.L.size(), rng);
  CliffordTableau t = hp_clifford_state(lay, u);
  const Partition part = lay.partition();
  TableauEntropy src(t);
  const double cmi0 = cmi(src, part);
  const auto order = shuffled_indices(lay.pairs.size(), rng);

  std::vector<double> trace = {0.0};
  for (size_t m = 1; m <= max_m; ++m) {
    const auto [l, r] = lay.pairs[order[m - 1]];
    t.measure_pauli(two_site(lay.total, l, r, 'X'), rng);
    t.measure_pauli(two_site(lay.total, l, r, 'Z'), rng);
    trace.push_back(cmi(src, part) - cmi0);
  }
  return trace;
}

DenseState hp_haar_state(const HpLayout& lay, const CMat& u) {
  DenseState psi = bell_product_state(lay.total, all_initial_pairs(lay));
  psi.apply_unitary(u, lay.L);
  psi.apply_unitary(u.conjugate(), lay.R);
  return psi;
}

std::vector<double> hp_haar_delta_trace(const HpLayout& lay, const CMat& u,
                                        const std::vector<size_t>& pair_order) {
  const Partition part = lay.partition();
  DenseState psi0 = hp_haar_state(lay, u);
  const double cmi0 = pure_cmi(psi0, part);

  struct Branch {
    double p;
    DenseState psi;
  };
  std::vector<Branch> branches = {{1.0, std::move(psi0)}};
  std::vector<double> trace = {0.0};
  for (size_t idx : pair_order) {
    const auto [l, r] = lay.pairs[idx];
    const auto inst = QuantumInstrument::bell_measurement(l, r);
    std::vector<Branch> next;
    for (auto& b : branches) {
      for (const auto& kraus : inst.kraus_sets) {
        DenseState child = b.psi;
        child.apply_unitary(kraus[0], inst.qubits);
        const double p = child.norm() * child.norm();
        if (b.p * p < 1e-14) continue;
        child.normalize();
        next.push_back({b.p * p, std::move(child)});
      }
    }
    branches = std::move(next);
    double avg = 0.0;
    for (const auto& b : branches) avg += b.p * pure_cmi(b.psi, part);
    trace.push_back(avg - cmi0);
  }
  return trace;
}

HaarHpResult hayden_preskill_haar(size_t n_a, size_t n_b, size_t n_c, size_t n_seeds, Rng& rng) {
  const HpLayout lay = hp_layout(n_a, n_b, n_c);
  const size_t d = size_t{1} << lay.L.size();
  const size_t steps = lay.pairs.size();
  std::vector<double> s1(steps + 1, 0.0), s2(steps + 1, 0.0);
  for (size_t seed = 0; seed < n_seeds; ++seed) {
    const CMat u = haar_unitary(d, rng);
    const auto order = shuffled_indices(steps, rng);
    const auto trace = hp_haar_delta_trace(lay, u, order);
    for (size_t m = 0; m <= steps; ++m) {
      s1[m] += trace[m];
      s2[m] += trace[m] * trace[m];
    }
  }
  HaarHpResult res;
  for (size_t m = 0; m <= steps; ++m) {
    const double mean = s1[m] / double(n_seeds);
    const double var = s2[m] / double(n_seeds) - mean * mean;
    res.mean_delta_i.push_back(mean);
    res.stderr_delta_i.push_back(std::sqrt(std::max(0.0, var) / double(n_seeds)));
  }
  // Knee estimate: first step whose increment reaches 80% of the largest
  // increment. Growth is sub-maximal before the knee and near-linear after.
  double max_inc = 0.0;
  for (size_t m = 1; m <= steps; ++m) {
    max_inc = std::max(max_inc, res.mean_delta_i[m] - res.mean_delta_i[m - 1]);
  }
  res.critical_m = steps;
  for (size_t m = 1; m <= steps; ++m) {
    if (res.mean_delta_i[m] - res.mean_delta_i[m - 1] >= 0.8 * max_inc) {
      res.critical_m = m;
      break;
    }
  }
  return res;
}

PostSelectionRun yk_postselection(size_t n_a, size_t n_b, size_t n_c,
                                  const std::vector<int>& outcomes, Rng& rng) {
  const HpLayout lay = hp_layout(n_a, n_b, n_c);
  if (outcomes.size() > lay.pairs.size()) throw std::invalid_argument("too many outcomes");
  const size_t d = size_t{1} << lay.L.size();
  const CMat u = haar_unitary(d, rng);
  const Partition part = lay.partition();
  DenseState psi = hp_haar_state(lay, u);
  const double cmi0 = pure_cmi(psi, part);

  std::vector<std::pair<int, int>> target_pairs = {{lay.A[0], lay.C[0]}};
  for (size_t i = 1; i < lay.n_a; ++i) target_pairs.emplace_back(lay.A[i], lay.C[i]);
  for (const auto& pr : lay.pairs) target_pairs.push_back(pr);
  const DenseState target = bell_product_state(lay.total, target_pairs);

  PostSelectionRun run;
  for (size_t step = 0; step < outcomes.size(); ++step) {
    const int o = outcomes[step];
    if (o < 0 || o > 3) throw std::invalid_argument("Bell outcome must be in 0..3");
    const auto [l, r] = lay.pairs[step];
    const auto inst = QuantumInstrument::bell_measurement(l, r);
    psi.apply_unitary(inst.kraus_sets[static_cast<size_t>(o)][0], inst.qubits);
    const double p = psi.norm() * psi.norm();
    if (p < 1e-12) throw std::runtime_error("post-selected branch has zero probability");
    psi.normalize();
    run.branch_p.push_back(p);
    run.delta_i.push_back(pure_cmi(psi, part) - cmi0);
    run.fidelity.push_back(fidelity(target, psi));
  }
  return run;
}

PauliString yk_decoder(const CliffordTableau& realized, const CliffordTableau& good) {
  if (realized.num_qubits() != good.num_qubits()) throw std::invalid_argument("size mismatch");
  CliffordTableau cr = realized;
  CliffordTableau cg = good;
  cr.canonicalize();
  cg.canonicalize();
  const size_t n = cr.num_qubits();
  PauliString d = PauliString::identity(n);
  for (size_t i = 0; i < n; ++i) {
    if (!cr.stabilizer(i).bits_equal(cg.stabilizer(i))) {
      throw std::invalid_argument("branches have different stabilizer groups");
    }
    if (cr.stabilizer(i).phase() != cg.stabilizer(i).phase()) {
      d *= cr.destabilizer(i);
    }
  }
  d.set_phase(0);
  return d;
}

YkDecoderTrial yk_clifford_decoder_trial(size_t n_a, size_t n_b, size_t n_c, size_t m, Rng& rng) {
  const HpLayout lay = hp_layout(n_a, n_b, n_c);
  if (m > lay.pairs.size()) throw std::invalid_argument("more measurements than pairs");
  const CliffordUnitary u = CliffordUnitary::random(lay.L.size(), rng);
  const CliffordTableau base = hp_clifford_state(lay, u);
  CliffordTableau good = base;
  CliffordTableau realized = base;

  const auto order = shuffled_indices(lay.pairs.size(), rng);
  YkDecoderTrial trial;
  trial.good_outcomes_realized = true;
  for (size_t i = 0; i < m; ++i) {
    const auto [l, r] = lay.pairs[order[i]];
    for (char kind : {'X', 'Z'}) {
      const PauliString op = two_site(lay.total, l, r, kind);
      good.measure_pauli_forced(op, +1);
      const auto res = realized.measure_pauli(op, rng);
      if (res.outcome != +1) trial.good_outcomes_realized = false;
    }
  }
  trial.d = yk_decoder(realized, good);
  CliffordTableau decoded = realized;
  decoded.apply_pauli(trial.d);
  trial.decoded_ok = CliffordTableau::same_state(decoded, good);
  return trial;
}

PullbackReport hp_pullback_check(const HpLayout& lay, const CliffordUnitary& u,
                                 const std::vector<size_t>& pair_idx) {
  const CliffordTableau t0 = hp_initial_state(lay);
  const CliffordUnitary v =
      u.embed(lay.total, lay.L).compose(u.conjugated().embed(lay.total, lay.R));
  const CliffordUnitary vinv = v.inverse();

  std::vector<int> ac = lay.A;
  ac.insert(ac.end(), lay.C.begin(), lay.C.end());
  const std::vector<int>& non_ac = lay.B;

  BitMatrix stab_bits(lay.total, 2 * non_ac.size());
  for (size_t i = 0; i < lay.total; ++i) {
    const PauliString& g = t0.stabilizer(i);
    for (size_t j = 0; j < non_ac.size(); ++j) {
      const size_t q = static_cast<size_t>(non_ac[j]);
      if (g.x(q)) stab_bits.set(i, 2 * j, true);
      if (g.z(q)) stab_bits.set(i, 2 * j + 1, true);
    }
  }

  PullbackReport rep;
  for (size_t idx : pair_idx) {
    const auto [l, r] = lay.pairs[idx];
    for (char kind : {'X', 'Z'}) {
      const PauliString p0 = vinv.conjugate_pauli(two_site(lay.total, l, r, kind));
      std::vector<uint64_t> target((2 * non_ac.size() + 63) / 64, 0);
      for (size_t j = 0; j < non_ac.size(); ++j) {
        const size_t q = static_cast<size_t>(non_ac[j]);
        if (p0.x(q)) target[(2 * j) >> 6] |= uint64_t{1} << ((2 * j) & 63);
        if (p0.z(q)) target[(2 * j + 1) >> 6] |= uint64_t{1} << ((2 * j + 1) & 63);
      }
      const auto coeff = stab_bits.solve_row_combination(target);
      if (!coeff) {
        rep.all_ac_supported = false;
        continue;
      }
      PauliString q = p0;
      for (size_t i = 0; i < lay.total; ++i) {
        if ((*coeff)[i]) q *= t0.stabilizer(i);
      }
      rep.ac_ops.push_back(q.restrict_to(ac));
    }
  }

  BitMatrix m(rep.ac_ops.size(), 2 * ac.size());
  for (size_t i = 0; i < rep.ac_ops.size(); ++i) {
    for (size_t j = 0; j < ac.size(); ++j) {
      if (rep.ac_ops[i].x(j)) m.set(i, 2 * j, true);
      if (rep.ac_ops[i].z(j)) m.set(i, 2 * j + 1, true);
    }
  }
  rep.independent = rep.all_ac_supported && m.eliminate() == rep.ac_ops.size();
  return rep;
}

}  // namespace cmikit
