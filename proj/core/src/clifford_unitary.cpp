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

#include "cmikit/clifford_unitary.hpp"

#include <stdexcept>

#include "cmikit/bitmatrix.hpp"

namespace cmikit {

CliffordUnitary CliffordUnitary::identity(size_t k) {
  CliffordUnitary u(k);
  u.xi_.reserve(k);
  u.zi_.reserve(k);
  for (size_t i = 0; i < k; ++i) {
    u.xi_.push_back(PauliString::single(k, i, 'X'));
    u.zi_.push_back(PauliString::single(k, i, 'Z'));
  }
  return u;
}

CliffordUnitary CliffordUnitary::from_gate(Gate g, size_t k, size_t a) {
  CliffordUnitary u = identity(k);
  switch (g) {
    case Gate::H:
      std::swap(u.xi_[a], u.zi_[a]);
      break;
    case Gate::S:
      u.xi_[a] = PauliString::single(k, a, 'Y');
      break;
    case Gate::X:
      u.zi_[a].negate();
      break;
    case Gate::Y:
      u.xi_[a].negate();
      u.zi_[a].negate();
      break;
    case Gate::Z:
      u.xi_[a].negate();
      break;
    default:
      throw std::invalid_argument("two-qubit gate given one index");
  }
  return u;
}

CliffordUnitary CliffordUnitary::from_gate(Gate g, size_t k, size_t a, size_t b) {
  CliffordUnitary u = identity(k);
  switch (g) {
    case Gate::CNOT:
      u.xi_[a] = PauliString::single(k, a, 'X') * PauliString::single(k, b, 'X');
      u.zi_[b] = PauliString::single(k, a, 'Z') * PauliString::single(k, b, 'Z');
      break;
    case Gate::CZ:
      u.xi_[a] = PauliString::single(k, a, 'X') * PauliString::single(k, b, 'Z');
      u.xi_[b] = PauliString::single(k, a, 'Z') * PauliString::single(k, b, 'X');
      break;
    default:
      throw std::invalid_argument("single-qubit gate given two indices");
  }
  return u;
}

namespace {

// Symplectic vectors over GF(2)^{2k}: component 2q is the X bit of qubit q,
// component 2q+1 the Z bit.
using Vec = std::vector<uint8_t>;

uint8_t sform(const Vec& u, const Vec& v) {
  uint8_t acc = 0;
  for (size_t q = 0; 2 * q + 1 < u.size(); ++q) {
    acc ^= (u[2 * q] & v[2 * q + 1]) ^ (u[2 * q + 1] & v[2 * q]);
  }
  return acc;
}

void add_into(Vec& dst, const Vec& src) {
  for (size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

bool is_zero(const Vec& v) {
  for (uint8_t b : v)
    if (b) return false;
  return true;
}

Vec random_combination(const std::vector<Vec>& basis, Rng& rng, size_t dim) {
  Vec out(dim, 0);
  for (const Vec& b : basis) {
    if (rng.bit()) add_into(out, b);
  }
  return out;
}

std::vector<Vec> independent_subset(const std::vector<Vec>& vecs, size_t dim) {
  BitMatrix m(vecs.size(), dim);
  for (size_t r = 0; r < vecs.size(); ++r) {
    for (size_t c = 0; c < dim; ++c) {
      if (vecs[r][c]) m.set(r, c, true);
    }
  }
  const size_t rk = m.eliminate();
  std::vector<Vec> out;
  out.reserve(rk);
  for (size_t r = 0; r < rk; ++r) {
    Vec v(dim, 0);
    for (size_t c = 0; c < dim; ++c) v[c] = m.get(r, c) ? 1 : 0;
    out.push_back(std::move(v));
  }
  return out;
}

PauliString vec_to_pauli(const Vec& v, size_t k) {
  PauliString p(k);
  for (size_t q = 0; q < k; ++q) {
    if (v[2 * q]) p.set_x(q, true);
    if (v[2 * q + 1]) p.set_z(q, true);
  }
  return p;
}

}  // namespace

CliffordUnitary CliffordUnitary::random(size_t k, Rng& rng) {
  const size_t dim = 2 * k;
  std::vector<Vec> basis;
  basis.reserve(dim);
  for (size_t i = 0; i < dim; ++i) {
    Vec e(dim, 0);
    e[i] = 1;
    basis.push_back(std::move(e));
  }

  CliffordUnitary u(k);
  u.xi_.reserve(k);
  u.zi_.reserve(k);
  while (!basis.empty()) {
    Vec v;
    do {
      v = random_combination(basis, rng, dim);
    } while (is_zero(v));

    const Vec* w0 = nullptr;
    for (const Vec& b : basis) {
      if (sform(v, b)) {
        w0 = &b;
        break;
      }
    }
    if (!w0) throw std::logic_error("degenerate symplectic complement");

    // u + (1 - <v,u>) w0 maps the basis span exactly two-to-one onto
    // {w : <v,w> = 1}, so w is uniform there.
    Vec w = random_combination(basis, rng, dim);
    if (!sform(v, w)) add_into(w, *w0);

    std::vector<Vec> reduced;
    reduced.reserve(basis.size());
    for (Vec b : basis) {
      if (sform(b, w)) add_into(b, v);
      if (sform(b, v)) add_into(b, w);
      if (!is_zero(b)) reduced.push_back(std::move(b));
    }
    basis = independent_subset(reduced, dim);

    PauliString px = vec_to_pauli(v, k);
    PauliString pz = vec_to_pauli(w, k);
    if (rng.bit()) px.negate();
    if (rng.bit()) pz.negate();
    u.xi_.push_back(std::move(px));
    u.zi_.push_back(std::move(pz));
  }
  return u;
}

PauliString CliffordUnitary::conjugate_pauli(const PauliString& p) const {
  if (p.num_qubits() != k_) throw std::invalid_argument("Pauli size mismatch");
  PauliString acc = PauliString::identity(k_);
  size_t ycount = 0;
  for (size_t q = 0; q < k_; ++q) {
    const bool xb = p.x(q), zb = p.z(q);
    if (xb && zb) ++ycount;
    if (xb) acc *= xi_[q];
    if (zb) acc *= zi_[q];
  }
  // p = i^{phase + #Y} * prod_q X_q^{x} Z_q^{z}; conjugation is applied
  // factor by factor in that fixed order.
  acc.mul_phase(static_cast<uint8_t>((p.phase() + ycount) & 3));
  return acc;
}

CliffordUnitary CliffordUnitary::compose(const CliffordUnitary& other) const {
  if (k_ != other.k_) throw std::invalid_argument("size mismatch");
  CliffordUnitary r(k_);
  r.xi_.reserve(k_);
  r.zi_.reserve(k_);
  for (size_t i = 0; i < k_; ++i) {
    r.xi_.push_back(conjugate_pauli(other.xi_[i]));
    r.zi_.push_back(conjugate_pauli(other.zi_[i]));
  }
  return r;
}

CliffordUnitary CliffordUnitary::inverse() const {
  const size_t dim = 2 * k_;
  BitMatrix m(dim, dim);
  for (size_t i = 0; i < k_; ++i) {
    for (size_t q = 0; q < k_; ++q) {
      if (xi_[i].x(q)) m.set(2 * i, 2 * q, true);
      if (xi_[i].z(q)) m.set(2 * i, 2 * q + 1, true);
      if (zi_[i].x(q)) m.set(2 * i + 1, 2 * q, true);
      if (zi_[i].z(q)) m.set(2 * i + 1, 2 * q + 1, true);
    }
  }
  auto preimage_of = [&](const PauliString& target) {
    std::vector<uint64_t> vb((dim + 63) / 64, 0);
    for (size_t q = 0; q < k_; ++q) {
      if (target.x(q)) vb[(2 * q) >> 6] |= uint64_t{1} << ((2 * q) & 63);
      if (target.z(q)) vb[(2 * q + 1) >> 6] |= uint64_t{1} << ((2 * q + 1) & 63);
    }
    auto coeff = m.solve_row_combination(vb);
    if (!coeff) throw std::logic_error("non-invertible Clifford images");
    PauliString cand = PauliString::identity(k_);
    for (size_t r = 0; r < dim; ++r) {
      if ((*coeff)[r]) {
        cand *= PauliString::single(k_, r / 2, (r % 2 == 0) ? 'X' : 'Z');
      }
    }
    cand.set_phase(0);
    PauliString fwd = conjugate_pauli(cand);
    if (fwd.phase() != target.phase()) cand.negate();
    return cand;
  };
  CliffordUnitary r(k_);
  r.xi_.reserve(k_);
  r.zi_.reserve(k_);
  for (size_t i = 0; i < k_; ++i) {
    r.xi_.push_back(preimage_of(PauliString::single(k_, i, 'X')));
    r.zi_.push_back(preimage_of(PauliString::single(k_, i, 'Z')));
  }
  return r;
}

CliffordUnitary CliffordUnitary::conjugated() const {
  // conj(U) P conj(U)^dag = conj(U conj(P) U^dag) and conj(X) = X,
  // conj(Z) = Z.
  CliffordUnitary r(k_);
  r.xi_.reserve(k_);
  r.zi_.reserve(k_);
  for (size_t i = 0; i < k_; ++i) {
    r.xi_.push_back(xi_[i].conjugated());
    r.zi_.push_back(zi_[i].conjugated());
  }
  return r;
}

void CliffordUnitary::apply_to(CliffordTableau& t, const std::vector<int>& qubits) const {
  if (qubits.size() != k_) throw std::invalid_argument("qubit list size mismatch");
  std::vector<PauliString> table;
  if (k_ <= 3) {
    table.reserve(size_t{1} << (2 * k_));
    for (size_t pat = 0; pat < (size_t{1} << (2 * k_)); ++pat) {
      PauliString p(k_);
      for (size_t q = 0; q < k_; ++q) {
        if ((pat >> (2 * q)) & 1) p.set_x(q, true);
        if ((pat >> (2 * q + 1)) & 1) p.set_z(q, true);
      }
      table.push_back(conjugate_pauli(p));
    }
  }
  auto update_row = [&](PauliString& row) {
    const PauliString* img;
    PauliString scratch;
    if (!table.empty()) {
      size_t pat = 0;
      for (size_t q = 0; q < k_; ++q) {
        const size_t tq = static_cast<size_t>(qubits[q]);
        if (row.x(tq)) pat |= size_t{1} << (2 * q);
        if (row.z(tq)) pat |= size_t{1} << (2 * q + 1);
      }
      img = &table[pat];
    } else {
      PauliString sub(k_);
      for (size_t q = 0; q < k_; ++q) {
        const size_t tq = static_cast<size_t>(qubits[q]);
        sub.set_x(q, row.x(tq));
        sub.set_z(q, row.z(tq));
      }
      scratch = conjugate_pauli(sub);
      img = &scratch;
    }
    for (size_t q = 0; q < k_; ++q) {
      const size_t tq = static_cast<size_t>(qubits[q]);
      row.set_x(tq, img->x(q));
      row.set_z(tq, img->z(q));
    }
    row.mul_phase(img->phase());
  };
  for (auto& p : t.stabilizers()) update_row(p);
  for (auto& p : t.destabilizers()) update_row(p);
}

CliffordUnitary CliffordUnitary::embed(size_t n_total, const std::vector<int>& qubits) const {
  if (qubits.size() != k_) throw std::invalid_argument("qubit list size mismatch");
  CliffordUnitary r = identity(n_total);
  auto lift = [&](const PauliString& img) {
    PauliString out(n_total);
    for (size_t q = 0; q < k_; ++q) {
      out.set_x(static_cast<size_t>(qubits[q]), img.x(q));
      out.set_z(static_cast<size_t>(qubits[q]), img.z(q));
    }
    out.set_phase(img.phase());
    return out;
  };
  for (size_t i = 0; i < k_; ++i) {
    r.xi_[static_cast<size_t>(qubits[i])] = lift(xi_[i]);
    r.zi_[static_cast<size_t>(qubits[i])] = lift(zi_[i]);
  }
  return r;
}

std::string CliffordUnitary::key() const {
  std::string s;
  for (size_t i = 0; i < k_; ++i) {
    s += xi_[i].to_string();
    s += '|';
    s += zi_[i].to_string();
    s += '|';
  }
  return s;
}

bool CliffordUnitary::operator==(const CliffordUnitary& other) const {
  return k_ == other.k_ && xi_ == other.xi_ && zi_ == other.zi_;
}

bool CliffordUnitary::check_valid() const {
  for (size_t i = 0; i < k_; ++i) {
    if (!xi_[i].is_hermitian() || !zi_[i].is_hermitian()) return false;
    for (size_t j = 0; j < k_; ++j) {
      if (xi_[i].commutes_with(zi_[j]) == (i == j)) return false;
      if (!xi_[i].commutes_with(xi_[j])) return false;
      if (!zi_[i].commutes_with(zi_[j])) return false;
    }
  }
  return true;
}

CliffordTableau random_stabilizer_state(size_t n, Rng& rng) {
  CliffordTableau t(n);
  CliffordUnitary u = CliffordUnitary::random(n, rng);
  std::vector<int> all;
  all.reserve(n);
  for (size_t q = 0; q < n; ++q) all.push_back(static_cast<int>(q));
  u.apply_to(t, all);
  return t;
}

}  // namespace cmikit
