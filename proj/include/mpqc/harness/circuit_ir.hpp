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

#ifndef MPQC_HARNESS_CIRCUIT_IR_HPP_
#define MPQC_HARNESS_CIRCUIT_IR_HPP_

#include <optional>
#include <string>
#include <vector>

#include "mpqc/gmw/bool_circuit.hpp"
#include "mpqc/qsim/state_vector.hpp"

namespace mpqc::harness {

// A quantum circuit plus the protocol-facing metadata: which party feeds
// which qubits, and which qubits carry the result.
struct QuantumSpec {
  qsim::QuantumCircuit circuit;
  std::vector<std::vector<int>> inputs;  // inputs[p] = qubits prepared by party p
  std::vector<int> outputs;

  void validate() const;
};

// One on-disk format, two circuit kinds. Exactly one of the two members is
// populated, matching `kind` ("quantum" or "boolean").
struct CircuitIR {
  std::string kind;
  std::optional<QuantumSpec> quantum;
  std::optional<gmw::BoolCircuit> boolean;

  static CircuitIR wrap(QuantumSpec spec);
  static CircuitIR wrap(gmw::BoolCircuit circuit);
};

std::string circuit_to_json(const CircuitIR& ir, int indent = 2);
CircuitIR circuit_from_json(const std::string& text);

CircuitIR load_circuit(const std::string& path);
void save_circuit(const std::string& path, const CircuitIR& ir);

}  // namespace mpqc::harness

#endif  // MPQC_HARNESS_CIRCUIT_IR_HPP_
