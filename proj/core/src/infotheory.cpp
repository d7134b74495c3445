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

#include "cmikit/infotheory.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace cmikit {

Partition Partition::contiguous(size_t na, size_t nb, size_t nc) {
  Partition p;
  for (size_t i = 0; i < na; ++i) p.A.push_back(static_cast<int>(i));
  for (size_t i = 0; i < nb; ++i) p.B.push_back(static_cast<int>(na + i));
  for (size_t i = 0; i < nc; ++i) p.C.push_back(static_cast<int>(na + nb + i));
  return p;
}

void Partition::erase_from_b(int q) {
  auto it = std::find(B.begin(), B.end(), q);
  if (it == B.end()) throw std::invalid_argument("qubit not in B");
  B.erase(it);
  E.push_back(q);
}

bool Partition::disjoint() const {
  std::set<int> seen;
  for (const auto* s : {&A, &B, &C, &E, &R}) {
    for (int q : *s) {
      if (!seen.insert(q).second) return false;
    }
  }
  return true;
}

std::vector<int> Partition::join(const std::vector<const std::vector<int>*>& sets) {
  std::vector<int> out;
  for (const auto* s : sets) out.insert(out.end(), s->begin(), s->end());
  return out;
}

double cmi(const EntropySource& src, const Partition& part) {
  const auto ab = Partition::join({&part.A, &part.B});
  const auto bc = Partition::join({&part.B, &part.C});
  const auto abc = Partition::join({&part.A, &part.B, &part.C});
  return src.entropy(ab) + src.entropy(bc) - src.entropy(part.B) - src.entropy(abc);
}

EntropyReport entropy_report(const EntropySource& src, const Partition& part) {
  EntropyReport r;
  r.s_ab = src.entropy(Partition::join({&part.A, &part.B}));
  r.s_bc = src.entropy(Partition::join({&part.B, &part.C}));
  r.s_b = src.entropy(part.B);
  r.s_abc = src.entropy(Partition::join({&part.A, &part.B, &part.C}));
  r.s_a = src.entropy(part.A);
  r.s_c = src.entropy(part.C);
  r.s_ac = src.entropy(Partition::join({&part.A, &part.C}));
  r.s_e = part.E.empty() ? 0.0 : src.entropy(part.E);
  r.cmi = r.s_ab + r.s_bc - r.s_b - r.s_abc;
  r.backend = src.backend_name();
  return r;
}

double delta_I(const EntropyReport& before, const EntropyReport& after) {
  return after.cmi - before.cmi;
}

double check_generic_bound(double delta_i, double s_post_abc) {
  return 2.0 * s_post_abc - delta_i;
}

MeasurementBoundReport check_measurement_bound(double delta_i, const OutcomeDistribution& dist,
                                               double s_post_abc) {
  return {dist.shannon_bits - delta_i, std::abs(s_post_abc - dist.shannon_bits)};
}

double born_average_cmi(const DensityMatrix& state, const QuantumInstrument& inst,
                        const Partition& part) {
  const auto res = apply_instrument(state, inst);
  double acc = 0.0;
  for (size_t i = 0; i < res.p.size(); ++i) {
    if (res.p[i] <= 1e-12) continue;
    MixedDenseEntropy src(res.states[i]);
    acc += res.p[i] * cmi(src, part);
  }
  return acc;
}

RegisterExtended extend_with_register(const DensityMatrix& state, const QuantumInstrument& inst,
                                      const Partition& part) {
  const auto res = apply_instrument(state, inst);
  size_t reg_bits = 0;
  while ((size_t{1} << reg_bits) < res.p.size()) ++reg_bits;
  const size_t n = state.num_qubits();
  const size_t n_ext = n + reg_bits;
  if (n_ext > kMaxDensityQubits) throw std::invalid_argument("register extension exceeds density cap");
  const size_t dim = size_t{1} << n;
  const size_t dim_ext = size_t{1} << n_ext;
  CMat ext = CMat::Zero(dim_ext, dim_ext);
  for (size_t i = 0; i < res.p.size(); ++i) {
    if (res.p[i] <= 1e-12) continue;
    ext.block(i * dim, i * dim, dim, dim) = res.p[i] * res.states[i].matrix();
  }
  RegisterExtended out{DensityMatrix(n_ext, std::move(ext)), part, reg_bits};
  for (size_t r = 0; r < reg_bits; ++r) out.part.B.push_back(static_cast<int>(n + r));
  return out;
}

double cmi_with_register(const DensityMatrix& state, const QuantumInstrument& inst,
                         const Partition& part) {
  const auto ext = extend_with_register(state, inst, part);
  MixedDenseEntropy src(ext.rho);
  return cmi(src, ext.part);
}

double born_average_entropy(const DensityMatrix& state, const QuantumInstrument& inst,
                            const std::vector<int>& subset) {
  const auto res = apply_instrument(state, inst);
  double acc = 0.0;
  for (size_t i = 0; i < res.p.size(); ++i) {
    if (res.p[i] <= 1e-12) continue;
    acc += res.p[i] * res.states[i].subsystem_entropy(subset);
  }
  return acc;
}

double orthogonality_report(const PostSelectionEnsemble& ens) {
  double best = 0.0;
  for (size_t i = 0; i < ens.states.size(); ++i) {
    if (ens.p[i] <= 1e-12) continue;
    for (size_t j = i + 1; j < ens.states.size(); ++j) {
      if (ens.p[j] <= 1e-12) continue;
      best = std::max(best, ens.states[i].overlap(ens.states[j]));
    }
  }
  return best;
}

DecouplingReport decoupling_report(const EntropySource& src, const Partition& part) {
  DecouplingReport r;
  r.s_e = part.E.empty() ? 0.0 : src.entropy(part.E);
  auto mi = [&](const std::vector<int>& x) {
    return src.entropy(x) + r.s_e - src.entropy(Partition::join({&x, &part.E}));
  };
  r.i_ae = mi(part.A);
  r.i_be = mi(part.B);
  r.i_ce = mi(part.C);
  return r;
}

std::pair<double, double> holevo_gap(const std::vector<double>& p,
                                     const std::vector<DensityMatrix>& rhos) {
  if (p.empty() || p.size() != rhos.size()) throw std::invalid_argument("ensemble size mismatch");
  const size_t dim = size_t{1} << rhos[0].num_qubits();
  CMat avg = CMat::Zero(dim, dim);
  double cond = 0.0, shannon = 0.0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 1e-15) continue;
    avg += p[i] * rhos[i].matrix();
    cond += p[i] * rhos[i].von_neumann_entropy();
    shannon -= p[i] * std::log2(p[i]);
  }
  DensityMatrix mixed(rhos[0].num_qubits(), std::move(avg));
  return {mixed.von_neumann_entropy() - cond, shannon};
}

BellStructureReport bell_structure_check(const PostSelectionEnsemble& ens, size_t n_a, size_t n_c,
                                         double measured_bits) {
  BellStructureReport rep;
  const double tol = 1e-8;
  const size_t nac = n_a + n_c;
  const size_t dim = size_t{1} << nac;

  CMat avg = CMat::Zero(dim, dim);
  bool equiprobable = true;
  size_t effective = 0;
  for (size_t i = 0; i < ens.p.size(); ++i) {
    if (ens.p[i] > 1e-12) ++effective;
  }
  for (size_t i = 0; i < ens.p.size(); ++i) {
    if (ens.p[i] <= 1e-12) continue;
    avg += ens.p[i] * ens.states[i].matrix();
    if (std::abs(ens.p[i] - 1.0 / double(effective)) > 1e-6) equiprobable = false;
  }
  const bool mixed_avg = (avg - CMat::Identity(dim, dim) / double(dim)).cwiseAbs().maxCoeff() < tol;
  rep.precondition_ok = mixed_avg && equiprobable;

  const double exp_dim_f = std::pow(2.0, double(nac) - measured_bits);
  rep.expected_dim = static_cast<size_t>(std::llround(exp_dim_f));

  rep.flat_spectra = true;
  rep.equal_dims = true;
  rep.marginals_mixed = true;
  std::vector<int> a_idx, c_idx;
  for (size_t i = 0; i < n_a; ++i) a_idx.push_back(static_cast<int>(i));
  for (size_t i = 0; i < n_c; ++i) c_idx.push_back(static_cast<int>(n_a + i));
  for (size_t i = 0; i < ens.p.size(); ++i) {
    if (ens.p[i] <= 1e-12) continue;
    const auto spec = ens.states[i].spectrum();
    size_t rank = 0;
    for (double l : spec) {
      if (l > tol) ++rank;
    }
    rep.block_dims.push_back(rank);
    for (double l : spec) {
      if (l > tol && std::abs(l - 1.0 / double(rank)) > 1e-6) rep.flat_spectra = false;
    }
    if (rank != rep.expected_dim) rep.equal_dims = false;
    for (const auto& idx : {a_idx, c_idx}) {
      if (idx.empty()) continue;
      const auto marg = ens.states[i].partial_trace(idx);
      const size_t md = size_t{1} << idx.size();
      if ((marg.matrix() - CMat::Identity(md, md) / double(md)).cwiseAbs().maxCoeff() > 1e-7) {
        rep.marginals_mixed = false;
      }
    }
  }
  return rep;
}

}  // namespace cmikit
