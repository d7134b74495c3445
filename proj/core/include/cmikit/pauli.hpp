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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cmikit {

/// n-qubit Pauli operator as a symplectic bit pair (x, z) per qubit plus a
/// global phase i^k. The phase is tracked mod 4 during composition; a
/// Hermitian Pauli has k in {0, 2} and exposes sign() = +/-1.
///
/// Operator convention: the stored object denotes
///   i^phase * prod_q W_q,  W_q in {I, X, Y, Z} per (x_q, z_q).
class PauliString {
 public:
  PauliString() : n_(0) {}
  explicit PauliString(size_t n)
      : n_(n), x_((n + 63) / 64, 0), z_((n + 63) / 64, 0) {}

  static PauliString identity(size_t n) { return PauliString(n); }
  /// Single-site Pauli; kind is 'X', 'Y' or 'Z'.
  static PauliString single(size_t n, size_t qubit, char kind);
  /// Parses strings like "+XIZ" / "-YY" / "XZ".
  static PauliString from_string(const std::string& s);

  size_t num_qubits() const { return n_; }
  size_t num_words() const { return x_.size(); }

  bool x(size_t q) const { return (x_[q >> 6] >> (q & 63)) & 1u; }
  bool z(size_t q) const { return (z_[q >> 6] >> (q & 63)) & 1u; }
  void set_x(size_t q, bool v);
  void set_z(size_t q, bool v);

  const std::vector<uint64_t>& x_words() const { return x_; }
  const std::vector<uint64_t>& z_words() const { return z_; }
  std::vector<uint64_t>& x_words() { return x_; }
  std::vector<uint64_t>& z_words() { return z_; }

  /// Phase exponent k of i^k, mod 4.
  uint8_t phase() const { return phase_; }
  void set_phase(uint8_t k) { phase_ = k & 3; }
  void mul_phase(uint8_t k) { phase_ = (phase_ + k) & 3; }

  bool is_hermitian() const { return (phase_ & 1) == 0; }
  /// +1 or -1. Requires a Hermitian phase.
  int sign() const;
  void set_sign(int s);
  void negate() { phase_ = (phase_ + 2) & 3; }

  bool is_identity_bits() const;
  size_t weight() const;

  bool commutes_with(const PauliString& other) const;

  /// Operator product this * other, with exact i^k phase tracking.
  PauliString operator*(const PauliString& other) const;
  PauliString& operator*=(const PauliString& other);

  /// Hermitian adjoint (conjugates the phase).
  PauliString adjoint() const;
  /// Complex conjugate in the computational basis: flips sign once per Y.
  PauliString conjugated() const;

  /// Restriction to the given qubits (in order), phase reset to 0.
  PauliString restrict_to(const std::vector<int>& qubits) const;

  bool operator==(const PauliString& other) const;
  bool bits_equal(const PauliString& other) const;

  std::string to_string() const;

 private:
  size_t n_;
  std::vector<uint64_t> x_, z_;
  uint8_t phase_ = 0;
};

}  // namespace cmikit
