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

#ifndef MPQC_PROTOCOLS_CLIFFORD_PATH_HPP_
#define MPQC_PROTOCOLS_CLIFFORD_PATH_HPP_

#include <cstdint>
#include <vector>

#include "mpqc/pauliframe/pauli_mask.hpp"
#include "mpqc/protocols/protocol_result.hpp"
#include "mpqc/qsim/register.hpp"
#include "mpqc/qsim/state_vector.hpp"

namespace mpqc::protocols {

// Additive shares of the per-wire flip bits that re-randomize intermediate
// masks. shares[j] is party j's contribution; all rows have the same length
// and index the intermediate wires cut-major, line-ascending. The joint flip
// for a wire is the XOR of every party's entry.
struct FlipShares {
  std::vector<std::vector<pauli::MaskBit>> shares;
};

// XORs every party's flip share into the matching mask entry. Masks may be
// longer than the shares cover; the tail - the output wires, which carry no
// flips - passes through unchanged.
std::vector<pauli::MaskBit> apply_qubit_flipping(std::vector<pauli::MaskBit> masks,
                                                 const FlipShares& flips);

struct CliffordOptions {
  // With flipping off every party's flip share is pinned to zero, so the
  // joint flip vanishes and an intermediate state plus its revealed mask
  // unmasks exactly. The protocol output is correct either way.
  bool qubit_flipping = true;
  // Copies out the joint state of all circuit lines at each cut, before the
  // joint flips land on them. Requires the lines to be separable from the
  // rest of the register at that moment.
  bool record_boundaries = false;
  // Pins pad keys and flip shares to zero: the masked evaluation then equals
  // the plaintext evaluation at every step.
  bool zero_randomness = false;
};

struct CliffordResult {
  ProtocolResult run;
  // One snapshot per cut (record_boundaries only), lines in circuit order.
  std::vector<qsim::StateVec> boundary_snapshots;
  // The joint flip applied at each cut, and the final correction applied to
  // each line before the result announcement: party 0's view of the jointly
  // computed mask trajectory.
  std::vector<std::vector<pauli::MaskBit>> combined_flips;
  std::vector<pauli::MaskBit> final_corrections;
};

// Fast path for circuits without T gates, three message layers total:
//
//   1. every party pads its lines with a quantum one-time pad and sends them
//      to party 0; in the same layer the joint computation's input shares go
//      out. Party 0 applies the circuit directly to the padded lines - the
//      pads commute out as a deferred Pauli frame.
//   2. the share-holders reveal the jointly computed bits to party 0: the
//      combined flip for every cut and the final correction for every line.
//      The mask trajectory is pushed through the public circuit inside the
//      joint computation, so no single party ever holds it.
//   3. party 0 flips each cut's lines, applies the final corrections, and
//      announces the result handles.
//
// cuts are strictly increasing gate positions in (0, f.gates.size()): cut c
// splits the evaluation between gates c-1 and c. At each cut party 0 applies
// the joint flip to every line, decoupling the state it holds from any
// revealed intermediate mask value while the folded-in flip keeps the final
// corrections exact.
CliffordResult run_clifford(qsim::Register& reg, const qsim::QuantumCircuit& f,
                            const std::vector<int>& cuts,
                            const std::vector<std::vector<qsim::Register::Handle>>& inputs,
                            uint64_t seed, const CliffordOptions& options = {});

}  // namespace mpqc::protocols

#endif  // MPQC_PROTOCOLS_CLIFFORD_PATH_HPP_
