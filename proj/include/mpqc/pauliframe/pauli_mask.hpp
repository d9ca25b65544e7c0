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

#ifndef MPQC_PAULIFRAME_PAULI_MASK_HPP_
#define MPQC_PAULIFRAME_PAULI_MASK_HPP_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mpqc/pauliframe/px_group.hpp"
#include "mpqc/qsim/state_vector.hpp"

namespace mpqc::pauli {

// Per-qubit X/Z mask bits: the frame tracks U X^a Z^b = X^a' Z^b' U without
// ever touching amplitudes. Phases are dropped at this level.
struct MaskBit {
  uint8_t a = 0;
  uint8_t b = 0;

  bool operator==(const MaskBit&) const = default;
};

struct PauliMask {
  std::vector<MaskBit> bits;

  static PauliMask zero(int num_qubits) {
    PauliMask m;
    m.bits.resize(num_qubits);
    return m;
  }

  static PauliMask random(int num_qubits, std::mt19937_64& rng) {
    PauliMask m = zero(num_qubits);
    for (auto& x : m.bits) {
      x.a = static_cast<uint8_t>(rng() & 1);
      x.b = static_cast<uint8_t>(rng() & 1);
    }
    return m;
  }

  int size() const { return static_cast<int>(bits.size()); }

  void xor_with(const PauliMask& o) {
    if (o.bits.size() != bits.size()) throw std::invalid_argument("mask size mismatch");
    for (size_t i = 0; i < bits.size(); ++i) {
      bits[i].a ^= o.bits[i].a;
      bits[i].b ^= o.bits[i].b;
    }
  }

  bool operator==(const PauliMask&) const = default;
};

// How mask bits move through each Clifford gate, i.e. the (a', b') with
// G X^a Z^b = (phase) X^a' Z^b' G. All rules are XOR-linear in (a, b).
inline MaskBit conjugate1(qsim::Gate g, MaskBit m) {
  switch (g) {
    case qsim::Gate::X:
    case qsim::Gate::Z:
      return m;
    case qsim::Gate::H:
      return {m.b, m.a};
    case qsim::Gate::P:
      return {m.a, static_cast<uint8_t>(m.a ^ m.b)};
    default:
      throw std::invalid_argument("conjugate1: not a 1-qubit Clifford gate");
  }
}

inline std::pair<MaskBit, MaskBit> conjugate_cnot(MaskBit control, MaskBit target) {
  MaskBit c2{control.a, static_cast<uint8_t>(control.b ^ target.b)};
  MaskBit t2{static_cast<uint8_t>(target.a ^ control.a), target.b};
  return {c2, t2};
}

// Mask entries must line up with the gate's targets (1 for single-qubit
// gates, [control, target] for CNOT). Rejects T: it leaves the Pauli group.
inline PauliMask conjugate_through_clifford(qsim::Gate g, const PauliMask& mask) {
  if (g == qsim::Gate::T) {
    throw std::invalid_argument("T is not Clifford; use conjugate_through_T");
  }
  if (mask.size() != qsim::gate_arity(g)) {
    throw std::invalid_argument("mask size does not match gate arity");
  }
  PauliMask out = mask;
  if (g == qsim::Gate::CNOT) {
    auto [c, t] = conjugate_cnot(mask.bits[0], mask.bits[1]);
    out.bits[0] = c;
    out.bits[1] = t;
  } else {
    out.bits[0] = conjugate1(g, mask.bits[0]);
  }
  return out;
}

struct TConjugation {
  MaskBit mask;  // (a', b') of the pushed-through Pauli
  uint8_t p;     // extra P power: T X^a Z^b = (phase) X^a' Z^b' P^p T
};

// T Z = Z T, and T X = (phase) X Z P T: pushing X through T costs one P.
inline TConjugation conjugate_through_T(MaskBit m) {
  TConjugation r;
  r.mask.a = m.a;
  r.mask.b = static_cast<uint8_t>(m.a ^ m.b);
  r.p = m.a;
  return r;
}

struct DeferResult {
  PauliMask final_mask;
  // One entry per T gate, in circuit order: the P power that gate demands.
  std::vector<uint8_t> p_corrections;
};

// Pushes an input-side mask through a whole circuit without simulating it:
// C (X^a Z^b ...) = (phase) (X^a' Z^b' ...) [P corrections at T sites] C.
inline DeferResult defer_pauli(const qsim::QuantumCircuit& circuit, PauliMask input_mask) {
  if (input_mask.size() != circuit.num_qubits) {
    throw std::invalid_argument("mask size does not match circuit width");
  }
  DeferResult r;
  r.final_mask = std::move(input_mask);
  auto& bits = r.final_mask.bits;
  for (const auto& g : circuit.gates) {
    switch (g.kind) {
      case qsim::Gate::CNOT: {
        auto [c, t] = conjugate_cnot(bits[g.t0], bits[g.t1]);
        bits[g.t0] = c;
        bits[g.t1] = t;
        break;
      }
      case qsim::Gate::T: {
        TConjugation tc = conjugate_through_T(bits[g.t0]);
        bits[g.t0] = tc.mask;
        r.p_corrections.push_back(tc.p);
        break;
      }
      default:
        bits[g.t0] = conjugate1(g.kind, bits[g.t0]);
    }
  }
  return r;
}

}  // namespace mpqc::pauli

#endif  // MPQC_PAULIFRAME_PAULI_MASK_HPP_
