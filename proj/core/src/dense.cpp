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

#include "cmikit/dense.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace cmikit {

namespace {

constexpr double kEigClamp = 1e-12;

size_t scatter_bits(size_t sub, const std::vector<int>& qubits) {
  size_t out = 0;
  for (size_t j = 0; j < qubits.size(); ++j) {
    if ((sub >> j) & 1) out |= size_t{1} << qubits[j];
  }
  return out;
}

size_t mask_of(const std::vector<int>& qubits) {
  size_t m = 0;
  for (int q : qubits) m |= size_t{1} << q;
  return m;
}

double entropy_of_eigs(const Eigen::VectorXd& eig) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < eig.size(); ++i) {
    const double l = eig[i];
    if (l > kEigClamp) s -= l * std::log2(l);
  }
  return s < 0.0 ? 0.0 : s;
}

}  // namespace

DenseState::DenseState(size_t n) : n_(n), amp_(CVec::Zero(size_t{1} << n)) {
  if (n > kMaxDenseStateQubits) throw std::invalid_argument("state-vector qubit cap exceeded");
  amp_[0] = 1.0;
}

DenseState::DenseState(size_t n, CVec amps) : n_(n), amp_(std::move(amps)) {
  if (n > kMaxDenseStateQubits) throw std::invalid_argument("state-vector qubit cap exceeded");
  if (amp_.size() != Eigen::Index(size_t{1} << n)) throw std::invalid_argument("amplitude count mismatch");
}

DenseState DenseState::haar(size_t n, Rng& rng) {
  if (n > kMaxDenseStateQubits) throw std::invalid_argument("state-vector qubit cap exceeded");
  const size_t d = size_t{1} << n;
  CVec v(d);
  for (size_t i = 0; i < d; ++i) v[i] = Cplx(rng.normal(), rng.normal());
  v /= v.norm();
  return DenseState(n, std::move(v));
}

void DenseState::apply_unitary(const CMat& u, const std::vector<int>& qubits) {
  const size_t k = qubits.size();
  const size_t d = size_t{1} << k;
  if (u.rows() != Eigen::Index(d) || u.cols() != Eigen::Index(d)) {
    throw std::invalid_argument("unitary dimension mismatch");
  }
  const size_t tmask = mask_of(qubits);
  const size_t dim = size_t{1} << n_;
  CVec block(d);
  for (size_t base = 0; base < dim; ++base) {
    if (base & tmask) continue;
    for (size_t s = 0; s < d; ++s) block[s] = amp_[base | scatter_bits(s, qubits)];
    block = u * block;
    for (size_t s = 0; s < d; ++s) amp_[base | scatter_bits(s, qubits)] = block[s];
  }
}

void DenseState::apply_pauli(const PauliString& p) {
  if (p.num_qubits() != n_) throw std::invalid_argument("Pauli size mismatch");
  size_t xmask = 0, zmask = 0, ycount = 0;
  for (size_t q = 0; q < n_; ++q) {
    if (p.x(q)) xmask |= size_t{1} << q;
    if (p.z(q)) zmask |= size_t{1} << q;
    if (p.x(q) && p.z(q)) ++ycount;
  }
  static const Cplx kI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Cplx global = kI[(p.phase() + ycount) & 3];
  const size_t dim = size_t{1} << n_;
  CVec out(dim);
  for (size_t j = 0; j < dim; ++j) {
    const double sign = (std::popcount(zmask & j) & 1) ? -1.0 : 1.0;
    out[j ^ xmask] = global * sign * amp_[j];
  }
  amp_ = std::move(out);
}

void DenseState::normalize() { amp_ /= amp_.norm(); }

DensityMatrix DenseState::density() const { return DensityMatrix::pure(*this); }

DensityMatrix DenseState::reduced(const std::vector<int>& keep) const {
  const size_t k = keep.size();
  std::vector<int> rest;
  for (size_t q = 0; q < n_; ++q) {
    bool in = false;
    for (int kk : keep) in |= (size_t(kk) == q);
    if (!in) rest.push_back(static_cast<int>(q));
  }
  const size_t dk = size_t{1} << k;
  const size_t dr = size_t{1} << rest.size();
  CMat m(dk, dr);
  for (size_t a = 0; a < dk; ++a) {
    const size_t abits = scatter_bits(a, keep);
    for (size_t e = 0; e < dr; ++e) m(a, e) = amp_[abits | scatter_bits(e, rest)];
  }
  return DensityMatrix(k, m * m.adjoint());
}

double DenseState::subsystem_entropy(const std::vector<int>& subset) const {
  if (subset.empty()) return 0.0;
  std::vector<int> rest;
  for (size_t q = 0; q < n_; ++q) {
    bool in = false;
    for (int kk : subset) in |= (size_t(kk) == q);
    if (!in) rest.push_back(static_cast<int>(q));
  }
  // Gram matrix on the smaller side keeps the eigenproblem small.
  const std::vector<int>& rows = subset.size() <= rest.size() ? subset : rest;
  const std::vector<int>& cols = subset.size() <= rest.size() ? rest : subset;
  const size_t dr = size_t{1} << rows.size();
  const size_t dc = size_t{1} << cols.size();
  CMat m(dr, dc);
  for (size_t a = 0; a < dr; ++a) {
    const size_t abits = scatter_bits(a, rows);
    for (size_t e = 0; e < dc; ++e) m(a, e) = amp_[abits | scatter_bits(e, cols)];
  }
  Eigen::SelfAdjointEigenSolver<CMat> es(m * m.adjoint());
  return entropy_of_eigs(es.eigenvalues());
}

DensityMatrix::DensityMatrix(size_t n, CMat m) : n_(n), m_(std::move(m)) {
  if (n > kMaxDensityQubits) throw std::invalid_argument("density-matrix qubit cap exceeded");
  if (m_.rows() != Eigen::Index(size_t{1} << n) || m_.cols() != m_.rows()) {
    throw std::invalid_argument("density matrix dimension mismatch");
  }
}

DensityMatrix DensityMatrix::pure(const DenseState& psi) {
  return DensityMatrix(psi.num_qubits(), psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityMatrix DensityMatrix::diagonal(size_t n, const std::vector<double>& probs) {
  const size_t d = size_t{1} << n;
  if (probs.size() != d) throw std::invalid_argument("probability count mismatch");
  CMat m = CMat::Zero(d, d);
  for (size_t i = 0; i < d; ++i) m(i, i) = probs[i];
  return DensityMatrix(n, std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(size_t n) {
  const size_t d = size_t{1} << n;
  return DensityMatrix(n, CMat::Identity(d, d) / double(d));
}

void DensityMatrix::apply_unitary(const CMat& u, const std::vector<int>& qubits) {
  const CMat full = embed_unitary(u, qubits, n_);
  m_ = full * m_ * full.adjoint();
}

DensityMatrix DensityMatrix::partial_trace(const std::vector<int>& keep) const {
  std::vector<int> rest;
  for (size_t q = 0; q < n_; ++q) {
    bool in = false;
    for (int kk : keep) in |= (size_t(kk) == q);
    if (!in) rest.push_back(static_cast<int>(q));
  }
  const size_t dk = size_t{1} << keep.size();
  const size_t dr = size_t{1} << rest.size();
  CMat out = CMat::Zero(dk, dk);
  for (size_t a = 0; a < dk; ++a) {
    const size_t abits = scatter_bits(a, keep);
    for (size_t b = 0; b < dk; ++b) {
      const size_t bbits = scatter_bits(b, keep);
      Cplx acc = 0.0;
      for (size_t e = 0; e < dr; ++e) {
        const size_t ebits = scatter_bits(e, rest);
        acc += m_(abits | ebits, bbits | ebits);
      }
      out(a, b) = acc;
    }
  }
  return DensityMatrix(keep.size(), std::move(out));
}

double DensityMatrix::von_neumann_entropy() const {
  Eigen::SelfAdjointEigenSolver<CMat> es((m_ + m_.adjoint()) / 2.0);
  return entropy_of_eigs(es.eigenvalues());
}

double DensityMatrix::subsystem_entropy(const std::vector<int>& subset) const {
  if (subset.empty()) return 0.0;
  return partial_trace(subset).von_neumann_entropy();
}

double DensityMatrix::overlap(const DensityMatrix& other) const {
  if (n_ != other.n_) throw std::invalid_argument("dimension mismatch");
  return (m_ * other.m_).trace().real();
}

std::vector<double> DensityMatrix::spectrum() const {
  Eigen::SelfAdjointEigenSolver<CMat> es((m_ + m_.adjoint()) / 2.0);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(out.begin(), out.end(), std::greater<double>());
  return out;
}

bool DensityMatrix::is_hermitian(double tol) const {
  return (m_ - m_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

CMat haar_unitary(size_t d, Rng& rng) {
  if (d > kMaxHaarDim) throw std::invalid_argument("unitary dimension cap exceeded");
  CMat g(d, d);
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < d; ++j) g(i, j) = Cplx(rng.normal(), rng.normal());
  }
  Eigen::HouseholderQR<CMat> qr(g);
  CMat q = qr.householderQ();
  CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (size_t j = 0; j < d; ++j) {
    const Cplx rj = r(j, j);
    const double a = std::abs(rj);
    q.col(j) *= (a > 0 ? rj / a : Cplx(1.0, 0.0));
  }
  return q;
}

CMat embed_unitary(const CMat& u, const std::vector<int>& qubits, size_t n) {
  const size_t k = qubits.size();
  const size_t d = size_t{1} << k;
  if (u.rows() != Eigen::Index(d)) throw std::invalid_argument("unitary dimension mismatch");
  const size_t dim = size_t{1} << n;
  const size_t tmask = mask_of(qubits);
  CMat full = CMat::Zero(dim, dim);
  for (size_t base = 0; base < dim; ++base) {
    if (base & tmask) continue;
    for (size_t si = 0; si < d; ++si) {
      const size_t row = base | scatter_bits(si, qubits);
      for (size_t sj = 0; sj < d; ++sj) {
        full(row, base | scatter_bits(sj, qubits)) = u(si, sj);
      }
    }
  }
  return full;
}

CMat pauli_matrix(const PauliString& p) {
  const size_t n = p.num_qubits();
  const size_t dim = size_t{1} << n;
  size_t xmask = 0, zmask = 0, ycount = 0;
  for (size_t q = 0; q < n; ++q) {
    if (p.x(q)) xmask |= size_t{1} << q;
    if (p.z(q)) zmask |= size_t{1} << q;
    if (p.x(q) && p.z(q)) ++ycount;
  }
  static const Cplx kI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Cplx global = kI[(p.phase() + ycount) & 3];
  CMat m = CMat::Zero(dim, dim);
  for (size_t j = 0; j < dim; ++j) {
    const double sign = (std::popcount(zmask & j) & 1) ? -1.0 : 1.0;
    m(j ^ xmask, j) = global * sign;
  }
  return m;
}

double fidelity(const DenseState& a, const DenseState& b) {
  if (a.num_qubits() != b.num_qubits()) throw std::invalid_argument("dimension mismatch");
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

QuantumInstrument QuantumInstrument::computational_measurement(const std::vector<int>& qubits) {
  const size_t d = size_t{1} << qubits.size();
  QuantumInstrument inst;
  inst.qubits = qubits;
  for (size_t b = 0; b < d; ++b) {
    CMat k = CMat::Zero(d, d);
    k(b, b) = 1.0;
    inst.kraus_sets.push_back({std::move(k)});
  }
  return inst;
}

QuantumInstrument QuantumInstrument::bell_measurement(int q1, int q2) {
  QuantumInstrument inst;
  inst.qubits = {q1, q2};
  const double s = 1.0 / std::sqrt(2.0);
  // Outcome 0 is the (|00> + |11>)/sqrt(2) projector.
  const double vecs[4][4] = {
      {s, 0, 0, s}, {s, 0, 0, -s}, {0, s, s, 0}, {0, s, -s, 0}};
  for (const auto& v : vecs) {
    CVec phi(4);
    for (int i = 0; i < 4; ++i) phi[i] = v[i];
    inst.kraus_sets.push_back({phi * phi.adjoint()});
  }
  return inst;
}

QuantumInstrument QuantumInstrument::pauli_measurement(const PauliString& p) {
  if (!p.is_hermitian()) throw std::invalid_argument("measured Pauli must be Hermitian");
  std::vector<int> support;
  for (size_t q = 0; q < p.num_qubits(); ++q) {
    if (p.x(q) || p.z(q)) support.push_back(static_cast<int>(q));
  }
  if (support.empty()) throw std::invalid_argument("identity is not measurable");
  const CMat pm = pauli_matrix(p.restrict_to(support)) * double(p.sign());
  const CMat id = CMat::Identity(pm.rows(), pm.cols());
  QuantumInstrument inst;
  inst.qubits = support;
  inst.kraus_sets.push_back({(id + pm) / 2.0});
  inst.kraus_sets.push_back({(id - pm) / 2.0});
  return inst;
}

QuantumInstrument QuantumInstrument::random(const std::vector<int>& qubits, size_t outcomes, Rng& rng) {
  const size_t d = size_t{1} << qubits.size();
  CMat g(outcomes * d, d);
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = Cplx(rng.normal(), rng.normal());
  }
  // K_i = G_i (G^dag G)^{-1/2} gives an exactly complete instrument.
  Eigen::SelfAdjointEigenSolver<CMat> es(g.adjoint() * g);
  CMat inv_sqrt = es.eigenvectors() *
                  es.eigenvalues().cwiseMax(1e-300).cwiseSqrt().cwiseInverse().asDiagonal() *
                  es.eigenvectors().adjoint();
  QuantumInstrument inst;
  inst.qubits = qubits;
  for (size_t i = 0; i < outcomes; ++i) {
    inst.kraus_sets.push_back({g.middleRows(i * d, d) * inv_sqrt});
  }
  return inst;
}

bool QuantumInstrument::is_complete(double tol) const {
  if (kraus_sets.empty()) return false;
  const size_t d = size_t{1} << qubits.size();
  CMat acc = CMat::Zero(d, d);
  for (const auto& set : kraus_sets) {
    for (const auto& k : set) acc += k.adjoint() * k;
  }
  return (acc - CMat::Identity(d, d)).cwiseAbs().maxCoeff() <= tol;
}

InstrumentResult apply_instrument(const DensityMatrix& rho, const QuantumInstrument& inst) {
  InstrumentResult res;
  const size_t dim = size_t{1} << rho.num_qubits();
  double total = 0.0;
  for (const auto& set : inst.kraus_sets) {
    CMat acc = CMat::Zero(dim, dim);
    for (const auto& k : set) {
      const CMat kf = embed_unitary(k, inst.qubits, rho.num_qubits());
      acc += kf * rho.matrix() * kf.adjoint();
    }
    double p = acc.trace().real();
    if (p < -1e-8) throw std::logic_error("negative branch probability");
    if (p < 0) p = 0;
    total += p;
    if (p > 1e-12) acc /= p;
    res.p.push_back(p);
    res.states.emplace_back(rho.num_qubits(), std::move(acc));
  }
  if (std::abs(total - 1.0) > 1e-8) throw std::logic_error("instrument probabilities do not sum to 1");
  res.dist.p = res.p;
  double sh = 0.0;
  for (double p : res.p) {
    if (p > 1e-15) sh -= p * std::log2(p);
  }
  res.dist.shannon_bits = sh;
  return res;
}

DensityMatrix apply_channel(const DensityMatrix& rho, const QuantumInstrument& inst) {
  const size_t dim = size_t{1} << rho.num_qubits();
  CMat acc = CMat::Zero(dim, dim);
  for (const auto& set : inst.kraus_sets) {
    for (const auto& k : set) {
      const CMat kf = embed_unitary(k, inst.qubits, rho.num_qubits());
      acc += kf * rho.matrix() * kf.adjoint();
    }
  }
  return DensityMatrix(rho.num_qubits(), std::move(acc));
}

DensityMatrix erase_qubits(const DensityMatrix& rho, const std::vector<int>& qubits) {
  DensityMatrix out = rho;
  for (int q : qubits) {
    QuantumInstrument reset;
    reset.qubits = {q};
    CMat k0 = CMat::Zero(2, 2), k1 = CMat::Zero(2, 2);
    k0(0, 0) = 1.0;
    k1(0, 1) = 1.0;
    reset.kraus_sets = {{std::move(k0)}, {std::move(k1)}};
    out = apply_channel(out, reset);
  }
  return out;
}

DenseState stabilizer_to_dense(const CliffordTableau& t) {
  const size_t n = t.num_qubits();
  if (n > kMaxDensityQubits) throw std::invalid_argument("stabilizer state too large for dense conversion");
  const size_t dim = size_t{1} << n;
  CMat rho = CMat::Identity(dim, dim);
  for (size_t i = 0; i < n; ++i) {
    rho = (rho + pauli_matrix(t.stabilizer(i)) * rho) / 2.0;
  }
  Eigen::Index best = 0;
  double best_norm = -1.0;
  for (Eigen::Index c = 0; c < rho.cols(); ++c) {
    const double nc = rho.col(c).norm();
    if (nc > best_norm) {
      best_norm = nc;
      best = c;
    }
  }
  CVec psi = rho.col(best);
  psi /= psi.norm();
  return DenseState(n, std::move(psi));
}

}  // namespace cmikit
