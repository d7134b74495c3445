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

#include "cmikit/tableau.hpp"

#include <stdexcept>

namespace cmikit {

CliffordTableau::CliffordTableau(size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("tableau needs at least one qubit");
  stab_.reserve(n);
  destab_.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    stab_.push_back(PauliString::single(n, i, 'Z'));
    destab_.push_back(PauliString::single(n, i, 'X'));
  }
}

namespace {

inline void gate_h(PauliString& p, size_t a) {
  const bool xb = p.x(a), zb = p.z(a);
  if (xb && zb) p.negate();
  p.set_x(a, zb);
  p.set_z(a, xb);
}

inline void gate_s(PauliString& p, size_t a) {
  const bool xb = p.x(a), zb = p.z(a);
  if (xb && zb) p.negate();
  p.set_z(a, zb ^ xb);
}

inline void gate_cnot(PauliString& p, size_t a, size_t b) {
  const bool xa = p.x(a), za = p.z(a), xb = p.x(b), zb = p.z(b);
  if (xa && zb && (xb == za)) p.negate();
  p.set_x(b, xb ^ xa);
  p.set_z(a, za ^ zb);
}

}  // namespace

void CliffordTableau::apply_gate(Gate g, size_t a) {
  if (a >= n_) throw std::out_of_range("qubit index");
  ++generation_;
  auto for_all = [&](auto&& f) {
    for (auto& p : stab_) f(p);
    for (auto& p : destab_) f(p);
  };
  switch (g) {
    case Gate::H:
      for_all([&](PauliString& p) { gate_h(p, a); });
      break;
    case Gate::S:
      for_all([&](PauliString& p) { gate_s(p, a); });
      break;
    case Gate::X:
      for_all([&](PauliString& p) {
        if (p.z(a)) p.negate();
      });
      break;
    case Gate::Y:
      for_all([&](PauliString& p) {
        if (p.x(a) != p.z(a)) p.negate();
      });
      break;
    case Gate::Z:
      for_all([&](PauliString& p) {
        if (p.x(a)) p.negate();
      });
      break;
    default:
      throw std::invalid_argument("two-qubit gate given one index");
  }
}

void CliffordTableau::apply_gate(Gate g, size_t a, size_t b) {
  if (a >= n_ || b >= n_) throw std::out_of_range("qubit index");
  if (a == b) throw std::invalid_argument("two-qubit gate needs distinct qubits");
  ++generation_;
  auto for_all = [&](auto&& f) {
    for (auto& p : stab_) f(p);
    for (auto& p : destab_) f(p);
  };
  switch (g) {
    case Gate::CNOT:
      for_all([&](PauliString& p) { gate_cnot(p, a, b); });
      break;
    case Gate::CZ:
      for_all([&](PauliString& p) {
        gate_h(p, b);
        gate_cnot(p, a, b);
        gate_h(p, b);
      });
      break;
    default:
      throw std::invalid_argument("single-qubit gate given two indices");
  }
}

MeasureResult CliffordTableau::measure_pauli(const PauliString& p, Rng& rng) {
  return measure_impl(p, [&rng]() { return rng.bit() ? -1 : +1; });
}

MeasureResult CliffordTableau::measure_pauli_forced(const PauliString& p, int desired_outcome) {
  if (desired_outcome != 1 && desired_outcome != -1) {
    throw std::invalid_argument("desired outcome must be +/-1");
  }
  return measure_impl(p, [desired_outcome]() { return desired_outcome; });
}

MeasureResult CliffordTableau::measure_impl(const PauliString& p,
                                            const std::function<int()>& outcome_fn) {
  if (!p.is_hermitian()) throw std::invalid_argument("measured Pauli must be Hermitian");
  if (p.num_qubits() != n_) throw std::invalid_argument("Pauli size mismatch");
  ++generation_;

  size_t pivot = n_;
  for (size_t i = 0; i < n_; ++i) {
    if (!stab_[i].commutes_with(p)) {
      pivot = i;
      break;
    }
  }

  if (pivot == n_) {
    // Deterministic: p equals (up to sign) a product of stabilizers.
    int group_sign = 0;
    if (!contains_in_group(p, &group_sign)) {
      throw std::logic_error("commuting Pauli not in stabilizer group of a pure state");
    }
    return {group_sign * p.sign(), false};
  }

  const PauliString pivot_row = stab_[pivot];
  for (size_t i = 0; i < n_; ++i) {
    if (i != pivot && !stab_[i].commutes_with(p)) stab_[i] *= pivot_row;
    if (i != pivot && !destab_[i].commutes_with(p)) destab_[i] *= pivot_row;
  }
  destab_[pivot] = pivot_row;
  const int outcome = outcome_fn();
  stab_[pivot] = p;
  if (outcome == -1) stab_[pivot].negate();
  return {outcome, true};
}

int CliffordTableau::subsystem_entropy(const std::vector<int>& subset) const {
  if (subset.empty()) return 0;
  BitMatrix m(n_, 2 * subset.size());
  for (size_t i = 0; i < n_; ++i) {
    const PauliString& g = stab_[i];
    for (size_t j = 0; j < subset.size(); ++j) {
      const size_t q = static_cast<size_t>(subset[j]);
      if (g.x(q)) m.set(i, 2 * j, true);
      if (g.z(q)) m.set(i, 2 * j + 1, true);
    }
  }
  return static_cast<int>(m.eliminate()) - static_cast<int>(subset.size());
}

bool CliffordTableau::contains_in_group(const PauliString& p, int* sign_out) const {
  PauliString prod = PauliString::identity(n_);
  for (size_t i = 0; i < n_; ++i) {
    if (!destab_[i].commutes_with(p)) prod *= stab_[i];
  }
  if (!prod.bits_equal(p)) return false;
  if (sign_out) *sign_out = prod.sign();
  return true;
}

void CliffordTableau::row_mul_stab(size_t dst, size_t src) {
  stab_[dst] *= stab_[src];
  destab_[src] *= destab_[dst];
}

void CliffordTableau::canonicalize() {
  size_t pivot_row = 0;
  auto bit_at = [&](size_t r, size_t col) {
    const size_t q = col >> 1;
    return (col & 1) ? stab_[r].z(q) : stab_[r].x(q);
  };
  for (size_t col = 0; col < 2 * n_ && pivot_row < n_; ++col) {
    size_t r = pivot_row;
    while (r < n_ && !bit_at(r, col)) ++r;
    if (r == n_) continue;
    if (r != pivot_row) {
      std::swap(stab_[r], stab_[pivot_row]);
      std::swap(destab_[r], destab_[pivot_row]);
    }
    for (size_t i = 0; i < n_; ++i) {
      if (i != pivot_row && bit_at(i, col)) row_mul_stab(i, pivot_row);
    }
    ++pivot_row;
  }
}

bool CliffordTableau::same_state(const CliffordTableau& a, const CliffordTableau& b) {
  if (a.n_ != b.n_) return false;
  CliffordTableau ca = a;
  CliffordTableau cb = b;
  ca.canonicalize();
  cb.canonicalize();
  for (size_t i = 0; i < a.n_; ++i) {
    if (!ca.stab_[i].bits_equal(cb.stab_[i])) return false;
    if (ca.stab_[i].phase() != cb.stab_[i].phase()) return false;
  }
  return true;
}

void CliffordTableau::apply_pauli(const PauliString& p) {
  ++generation_;
  for (auto& g : stab_) {
    if (!g.commutes_with(p)) g.negate();
  }
  for (auto& g : destab_) {
    if (!g.commutes_with(p)) g.negate();
  }
}

bool CliffordTableau::check_invariants() const {
  BitMatrix m(n_, 2 * n_);
  for (size_t i = 0; i < n_; ++i) {
    if (!stab_[i].is_hermitian()) return false;
    for (size_t j = 0; j < n_; ++j) {
      if (!stab_[i].commutes_with(stab_[j])) return false;
      const bool anti = !destab_[j].commutes_with(stab_[i]);
      if (anti != (i == j)) return false;
      if (stab_[i].x(j)) m.set(i, 2 * j, true);
      if (stab_[i].z(j)) m.set(i, 2 * j + 1, true);
    }
  }
  return m.eliminate() == n_;
}

}  // namespace cmikit
