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

#include "cmikit/pauli.hpp"

using cmikit::PauliString;

TEST_CASE("from_string round trips") {
  for (const char* s : {"+XIZ", "-YY", "+IIII", "-ZXYI"}) {
    const PauliString p = PauliString::from_string(s);
    CHECK(p.to_string() == s);
  }
  CHECK(PauliString::from_string("XZ").to_string() == "+XZ");
}

TEST_CASE("single-qubit products follow the Pauli algebra") {
  const PauliString x = PauliString::from_string("X");
  const PauliString y = PauliString::from_string("Y");
  const PauliString z = PauliString::from_string("Z");
  // XY = iZ, YX = -iZ, XYZ = iI
  PauliString xy = x * y;
  CHECK(xy.phase() == 1);
  CHECK(xy.z(0));
  CHECK(!xy.x(0));
  PauliString yx = y * x;
  CHECK(yx.phase() == 3);
  PauliString xyz = x * y * z;
  CHECK(xyz.is_identity_bits());
  CHECK(xyz.phase() == 1);
  // X^2 = I with phase 0
  PauliString xx = x * x;
  CHECK(xx.is_identity_bits());
  CHECK(xx.phase() == 0);
}

TEST_CASE("commutation matches symplectic overlap") {
  const PauliString a = PauliString::from_string("XXI");
  const PauliString b = PauliString::from_string("ZZI");
  const PauliString c = PauliString::from_string("ZIZ");
  CHECK(a.commutes_with(b));      // two anticommuting sites
  CHECK(!a.commutes_with(c));     // one anticommuting site
}

TEST_CASE("adjoint and conjugation") {
  PauliString p = PauliString::from_string("-XY");
  CHECK(p.adjoint() == p);  // Hermitian
  // conjugate flips sign once per Y
  CHECK(p.conjugated().sign() == +1);
  CHECK(PauliString::from_string("+YY").conjugated().sign() == +1);
  CHECK(PauliString::from_string("+YI").conjugated().sign() == -1);
}

TEST_CASE("restrict_to keeps listed qubits in order") {
  const PauliString p = PauliString::from_string("-XIZY");
  const PauliString r = p.restrict_to({3, 0});
  CHECK(r.num_qubits() == 2);
  CHECK(r.to_string() == "+YX");
}

TEST_CASE("weight and identity detection") {
  CHECK(PauliString::from_string("+IXIY").weight() == 2);
  CHECK(PauliString::identity(5).is_identity_bits());
  CHECK(!PauliString::from_string("+IIZ").is_identity_bits());
}
