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

#include "cmikit/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace cmikit {

PauliString PauliString::single(size_t n, size_t qubit, char kind) {
  PauliString p(n);
  switch (kind) {
    case 'X':
      p.set_x(qubit, true);
      break;
    case 'Y':
      p.set_x(qubit, true);
      p.set_z(qubit, true);
      break;
    case 'Z':
      p.set_z(qubit, true);
      break;
    default:
      throw std::invalid_argument("Pauli kind must be X, Y or Z");
  }
  return p;
}

PauliString PauliString::from_string(const std::string& s) {
  size_t start = 0;
  int sign = +1;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    sign = s[0] == '-' ? -1 : +1;
    start = 1;
  }
  const size_t n = s.size() - start;
  PauliString p(n);
  for (size_t i = 0; i < n; ++i) {
    switch (s[start + i]) {
      case 'I':
        break;
      case 'X':
        p.set_x(i, true);
        break;
      case 'Y':
        p.set_x(i, true);
        p.set_z(i, true);
        break;
      case 'Z':
        p.set_z(i, true);
        break;
      default:
        throw std::invalid_argument("bad Pauli character");
    }
  }
  p.set_sign(sign);
  return p;
}

void PauliString::set_x(size_t q, bool v) {
  uint64_t& w = x_[q >> 6];
  const uint64_t m = uint64_t{1} << (q & 63);
  w = v ? (w | m) : (w & ~m);
}

void PauliString::set_z(size_t q, bool v) {
  uint64_t& w = z_[q >> 6];
  const uint64_t m = uint64_t{1} << (q & 63);
  w = v ? (w | m) : (w & ~m);
}

int PauliString::sign() const {
  if (!is_hermitian()) throw std::logic_error("sign of non-Hermitian Pauli");
  return phase_ == 0 ? +1 : -1;
}

void PauliString::set_sign(int s) {
  if (s != 1 && s != -1) throw std::invalid_argument("sign must be +/-1");
  phase_ = s == 1 ? 0 : 2;
}

bool PauliString::is_identity_bits() const {
  for (size_t w = 0; w < x_.size(); ++w) {
    if (x_[w] != 0 || z_[w] != 0) return false;
  }
  return true;
}

size_t PauliString::weight() const {
  size_t c = 0;
  for (size_t w = 0; w < x_.size(); ++w) {
    c += std::popcount(x_[w] | z_[w]);
  }
  return c;
}

bool PauliString::commutes_with(const PauliString& other) const {
  uint64_t acc = 0;
  for (size_t w = 0; w < x_.size(); ++w) {
    acc ^= (x_[w] & other.z_[w]) ^ (z_[w] & other.x_[w]);
  }
  return (std::popcount(acc) & 1) == 0;
}

PauliString& PauliString::operator*=(const PauliString& other) {
  if (n_ != other.n_) throw std::invalid_argument("Pauli size mismatch");
  // Per-site phase of W_l * W_r: +i for (X,Y),(Y,Z),(Z,X), -i for the
  // reverse orderings, 0 otherwise. Accumulated bit-parallel, mod 4.
  int cnt = 0;
  for (size_t w = 0; w < x_.size(); ++w) {
    const uint64_t x1 = x_[w], z1 = z_[w];
    const uint64_t x2 = other.x_[w], z2 = other.z_[w];
    const uint64_t nonzero = (x1 | z1) & (x2 | z2) & ((x1 ^ x2) | (z1 ^ z2));
    const uint64_t plus = (x1 & ~z1 & x2 & z2)   // X * Y
                          | (x1 & z1 & ~x2 & z2)  // Y * Z
                          | (~x1 & z1 & x2 & ~z2);  // Z * X
    const uint64_t minus = nonzero & ~plus;
    cnt += std::popcount(plus) - std::popcount(minus);
    x_[w] ^= x2;
    z_[w] ^= z2;
  }
  phase_ = static_cast<uint8_t>((phase_ + other.phase_ + (cnt & 3) + 4) & 3);
  return *this;
}

PauliString PauliString::operator*(const PauliString& other) const {
  PauliString r = *this;
  r *= other;
  return r;
}

PauliString PauliString::adjoint() const {
  PauliString r = *this;
  r.phase_ = static_cast<uint8_t>((4 - phase_) & 3);
  return r;
}

PauliString PauliString::conjugated() const {
  PauliString r = *this;
  size_t ycount = 0;
  for (size_t w = 0; w < x_.size(); ++w) ycount += std::popcount(x_[w] & z_[w]);
  // conj(i^k) = i^{-k}; conj(Y) = -Y.
  r.phase_ = static_cast<uint8_t>((4 - phase_) & 3);
  if (ycount & 1) r.negate();
  return r;
}

PauliString PauliString::restrict_to(const std::vector<int>& qubits) const {
  PauliString r(qubits.size());
  for (size_t i = 0; i < qubits.size(); ++i) {
    r.set_x(i, x(static_cast<size_t>(qubits[i])));
    r.set_z(i, z(static_cast<size_t>(qubits[i])));
  }
  return r;
}

bool PauliString::bits_equal(const PauliString& other) const {
  return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
}

bool PauliString::operator==(const PauliString& other) const {
  return bits_equal(other) && phase_ == other.phase_;
}

std::string PauliString::to_string() const {
  std::string s;
  switch (phase_) {
    case 0:
      s = "+";
      break;
    case 1:
      s = "+i";
      break;
    case 2:
      s = "-";
      break;
    case 3:
      s = "-i";
      break;
  }
  for (size_t q = 0; q < n_; ++q) {
    const bool xb = x(q), zb = z(q);
    s += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
  }
  return s;
}

}  // namespace cmikit
