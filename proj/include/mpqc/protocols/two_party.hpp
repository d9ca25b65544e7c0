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

#ifndef MPQC_PROTOCOLS_TWO_PARTY_HPP_
#define MPQC_PROTOCOLS_TWO_PARTY_HPP_

#include <cstdint>
#include <vector>

#include "mpqc/protocols/protocol_result.hpp"
#include "mpqc/qsim/register.hpp"
#include "mpqc/qsim/state_vector.hpp"

namespace mpqc::protocols {

// Two-party evaluation of a public circuit on joint quantum input, with a
// message count that does not depend on the circuit's depth. Alice (party 0)
// owns the first alice_input.size() circuit lines, Bob (party 1) the rest.
//
// Round flow, one message layer each:
//   1. Alice -> Bob:  her input qubits under a quantum one-time pad.
//   2. Bob -> Alice:  a randomized encoding of the whole circuit evaluated
//                     over the padded input and his own input, with the
//                     randomizers, his lines' teleport frames, and an output
//                     map in the clear; the frames of Alice's lines withheld.
//   3. Alice -> Bob:  one oblivious-transfer request per pad key bit.
//   4. Bob -> Alice:  the responses; each delivers frame XOR key bit, which
//                     is exactly the correction that undoes the pad inside
//                     the encoding without revealing the frame itself.
//   5. Alice -> Bob:  the decoded output qubits.
//
// Both parties end up with the result: Alice decodes it, then passes the
// qubits to Bob. The returned outputs are the handles both recorded.
ProtocolResult run_two_party(qsim::Register& reg, const qsim::QuantumCircuit& f,
                             const std::vector<qsim::Register::Handle>& alice_input,
                             const std::vector<qsim::Register::Handle>& bob_input,
                             uint64_t seed);

}  // namespace mpqc::protocols

#endif  // MPQC_PROTOCOLS_TWO_PARTY_HPP_
