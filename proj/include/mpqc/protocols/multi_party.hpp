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

#ifndef MPQC_PROTOCOLS_MULTI_PARTY_HPP_
#define MPQC_PROTOCOLS_MULTI_PARTY_HPP_

#include <cstdint>
#include <vector>

#include "mpqc/protocols/protocol_result.hpp"
#include "mpqc/qsim/register.hpp"
#include "mpqc/qsim/state_vector.hpp"

namespace mpqc::protocols {

struct MultiPartyOptions {
  // Seed bits per party inside the jointly computed garbling.
  int k = 4;
};

// n-party evaluation of a public circuit with a round count independent of
// its depth. Party p owns a contiguous block of circuit lines in party
// order; party 0 is the designated holder of quantum state: it receives the
// padded inputs, runs the encoding and decoding, and announces the result.
//
// Round flow:
//   1. every party pads its input qubits and broadcasts the handles; at the
//      same time the joint computation of the garbled offset program and the
//      combined randomizers starts (shares).
//   2-4. the joint computation's transfer layer and its reveal, directed to
//      party 0. Its circuit depth is a structural constant, so these three
//      rounds never grow with the evaluated circuit.
//   5. party 0 encodes with the combined randomizers, evaluates the garbled
//      offset on its own teleport outcomes to learn the effective frames of
//      foreign lines, decodes, and broadcasts the output handles.
//
// The offset program is what keeps pad keys out of any message: its only
// outputs are outcome-XOR-key bits, bound to outcomes party 0 alone knows.
ProtocolResult run_multi_party(qsim::Register& reg, const qsim::QuantumCircuit& f,
                               const std::vector<std::vector<qsim::Register::Handle>>& inputs,
                               uint64_t seed, const MultiPartyOptions& options = {});

}  // namespace mpqc::protocols

#endif  // MPQC_PROTOCOLS_MULTI_PARTY_HPP_
