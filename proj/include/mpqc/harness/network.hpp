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

#ifndef MPQC_HARNESS_NETWORK_HPP_
#define MPQC_HARNESS_NETWORK_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace mpqc::harness {

// One classical message on the simulated wire. Quantum state never rides
// here; protocols hand qubits around as ownership changes on a shared
// in-process register, and only the classical bytes appear on the network.
struct Message {
  int from = -1;
  int to = -1;
  std::string tag;  // short human-readable label, e.g. "share", "ot-req"
  std::vector<uint8_t> payload;
};

// A protocol participant. step() is called once per iteration with the
// messages addressed to it, and returns the messages it sends this round.
// done() means: will send nothing more and expects nothing more.
class Party {
 public:
  virtual ~Party() = default;
  virtual std::vector<Message> step(int iteration, const std::vector<Message>& inbox) = 0;
  virtual bool done() const = 0;
};

struct Transcript {
  struct Round {
    int index = 0;  // iteration at which the messages were sent
    std::vector<Message> messages;
  };
  std::vector<Round> rounds;

  // Rounds containing at least one message whose tag does not start with
  // `excluded_prefix` (empty prefix excludes nothing).
  int counted_rounds(const std::string& excluded_prefix = "") const;

  size_t total_messages() const;
  size_t total_payload_bytes() const;

  std::string to_json_string(int indent = -1) const;  // hex payloads
  static Transcript from_json_string(const std::string& text);
};

struct RunResult {
  Transcript transcript;
  int rounds_used = 0;  // message-bearing rounds, nothing excluded
};

// Lock-step scheduler with simultaneous delivery: everything sent during
// iteration k arrives at iteration k+1, all at once. Iterations where nobody
// sends don't appear in the transcript. Throws on deadlock (messages pending
// for nobody, or parties idle but not done) and on malformed addressing.
RunResult run_protocol(const std::vector<Party*>& parties, int max_iterations = 10000);

}  // namespace mpqc::harness

#endif  // MPQC_HARNESS_NETWORK_HPP_
