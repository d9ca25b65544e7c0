// Copyright 2026 The mpqclab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MPQC_PAULIFRAME_PX_GROUP_HPP_
#define MPQC_PAULIFRAME_PX_GROUP_HPP_

#include <cstdint>
#include <stdexcept>

#include "mpqc/qsim/state_vector.hpp"

namespace mpqc::pauli {

// Group element i^c X^a P^b with a in {0,1} and b, c in {0,1,2,3}:
// 32 elements total. Closed under multiplication because P^b X = i^b X P^{-b}.
// Z is the special case b = 2, c = 0; a plain Pauli X^a Z^b embeds as
// (a, 2b, 0).
struct PXElement {
  uint8_t a = 0;  // X power, mod 2
  uint8_t b = 0;  // P power, mod 4
  uint8_t c = 0;  // power of i, mod 4

  bool operator==(const PXElement&) const = default;
};

inline PXElement px_identity() { return {0, 0, 0}; }

inline PXElement px_from_pauli(int a, int b) {
  return {static_cast<uint8_t>(a & 1), static_cast<uint8_t>((b & 1) * 2), 0};
}

// Product e1 * e2 (e1 applied after e2, i.e. matrix order).
// Moving e1's P-power past e2's X flips its sign and emits a phase:
// P^b X = i^b X P^{4-b}.
inline PXElement px_compose(const PXElement& e1, const PXElement& e2) {
  PXElement r;
  r.a = e1.a ^ e2.a;
  if (e2.a == 0) {
    r.b = static_cast<uint8_t>((e1.b + e2.b) % 4);
    r.c = static_cast<uint8_t>((e1.c + e2.c) % 4);
  } else {
    r.b = static_cast<uint8_t>((e2.b - e1.b + 4) % 4);
    r.c = static_cast<uint8_t>((e1.c + e2.c + e1.b) % 4);
  }
  return r;
}

inline PXElement px_invert(const PXElement& e) {
  if (e.a == 0) {
    return {0, static_cast<uint8_t>((4 - e.b) % 4), static_cast<uint8_t>((4 - e.c) % 4)};
  }
  // (i^c X P^b)^-1 = i^{-c-b} X P^b.
  return {1, e.b, static_cast<uint8_t>((8 - e.b - e.c) % 4)};
}

// Concrete 2x2 matrix: i^c X^a P^b, or its H-conjugate when `conjugated`.
inline qsim::Matrix2<double> px_matrix(const PXElement& e, bool conjugated = false) {
  using M = qsim::Matrix2<double>;
  static const std::complex<double> kI(0, 1);
  M m = M::Identity();
  for (int k = 0; k < e.b; ++k) m = qsim::gate_matrix1<double>(qsim::Gate::P) * m;
  if (e.a) m = qsim::gate_matrix1<double>(qsim::Gate::X) * m;
  std::complex<double> phase(1, 0);
  for (int k = 0; k < e.c; ++k) phase *= kI;
  m *= phase;
  if (conjugated) {
    M h = qsim::gate_matrix1<double>(qsim::Gate::H);
    m = h * m * h;
  }
  return m;
}

}  // namespace mpqc::pauli

#endif  // MPQC_PAULIFRAME_PX_GROUP_HPP_
