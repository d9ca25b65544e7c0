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

#include "mpqc/dqre/encoding.hpp"

#include <stdexcept>

namespace mpqc::dqre {

int DqreProgram::epr_count() const {
  int pairs = 0;
  for (const auto& g : gadgets) pairs += static_cast<int>(g.lines.size());
  return pairs;
}

DqreProgram compile(const qsim::QuantumCircuit& circuit) {
  if (circuit.num_qubits < 1) throw std::invalid_argument("circuit has no qubits");
  DqreProgram prog;
  prog.circuit = circuit;

  GadgetShape input;
  input.gate_index = -1;
  for (int q = 0; q < circuit.num_qubits; ++q) input.lines.push_back(q);
  prog.gadgets.push_back(std::move(input));

  for (size_t gi = 0; gi < circuit.gates.size(); ++gi) {
    const auto& g = circuit.gates[gi];
    GadgetShape shape;
    shape.gate_index = static_cast<int>(gi);
    shape.lines.push_back(g.t0);
    if (qsim::gate_arity(g.kind) == 2) {
      if (g.t1 < 0 || g.t1 >= circuit.num_qubits || g.t1 == g.t0) {
        throw std::invalid_argument("bad two-qubit gate targets");
      }
      shape.lines.push_back(g.t1);
    }
    if (g.t0 < 0 || g.t0 >= circuit.num_qubits) {
      throw std::invalid_argument("gate target out of range");
    }
    prog.gadgets.push_back(std::move(shape));
  }
  return prog;
}

}  // namespace mpqc::dqre
