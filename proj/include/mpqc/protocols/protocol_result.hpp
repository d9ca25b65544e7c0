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

#ifndef MPQC_PROTOCOLS_PROTOCOL_RESULT_HPP_
#define MPQC_PROTOCOLS_PROTOCOL_RESULT_HPP_

#include <vector>

#include "mpqc/harness/network.hpp"
#include "mpqc/qsim/register.hpp"

namespace mpqc::protocols {

// Outcome of one protocol run over a shared register. Output qubits are
// reported as register handles: the register is the lab's stand-in for a
// quantum channel, so "sending" a qubit means naming its handle in a message
// and ceasing to touch it.
struct ProtocolResult {
  // The output qubits, one handle per circuit output line.
  std::vector<qsim::Register::Handle> outputs;

  // What each party recorded as the output location. Honest runs agree on
  // every entry; tests assert it.
  std::vector<std::vector<qsim::Register::Handle>> per_party;

  // Message-bearing rounds, nothing excluded.
  int rounds_used = 0;

  harness::Transcript transcript;
};

}  // namespace mpqc::protocols

#endif  // MPQC_PROTOCOLS_PROTOCOL_RESULT_HPP_
