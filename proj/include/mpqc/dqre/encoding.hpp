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

#ifndef MPQC_DQRE_ENCODING_HPP_
#define MPQC_DQRE_ENCODING_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "mpqc/pauliframe/px_group.hpp"
#include "mpqc/qsim/register.hpp"
#include "mpqc/qsim/state_vector.hpp"

namespace mpqc::dqre {

// A randomized encoding of one circuit execution, decomposable gate by gate:
// every gate becomes a gadget of EPR pairs with the gate burnt into the
// carrier halves at encode time, so encoding depth is constant no matter how
// deep the circuit is. Decoding teleports the running state through the
// gadget chain and is the only sequential part.

// One gadget: the circuit gate it realizes (-1 = the input gadget, identity
// on every line) and the qubit lines it touches, in target order.
struct GadgetShape {
  int gate_index = -1;
  std::vector<int> lines;
};

struct DqreProgram {
  qsim::QuantumCircuit circuit;
  std::vector<GadgetShape> gadgets;  // input gadget first, then circuit order

  // One EPR pair per teleportation hop: every input qubit enters the input
  // gadget, and every gadget line is entered by the preceding carrier.
  int epr_count() const;
};

DqreProgram compile(const qsim::QuantumCircuit& circuit);

// Classical half of the encoding. Without it the quantum half is a heap of
// maximally mixed qubits; with it the decoder recovers the circuit output
// exactly.
struct DqreLabels {
  // Input-gadget teleport outcomes (x, z) per circuit qubit.
  std::vector<std::pair<uint8_t, uint8_t>> input_frame;
  // Per gadget, per line slot: the randomizer applied to the carrier half.
  std::vector<std::vector<pauli::PXElement>> randomizers;
};

// Quantum half: handles into the caller's register. in_halves[0] is empty
// (the input gadget's Bell measurements happen at encode time).
struct EncodedState {
  std::vector<std::vector<qsim::Register::Handle>> in_halves;
  std::vector<std::vector<qsim::Register::Handle>> out_halves;
};

struct EncodeResult {
  EncodedState state;
  DqreLabels labels;
};

struct EncodeOptions {
  // Force identity randomizers: the encoding degenerates to a bare teleport
  // chain. Exercises the frame algebra without the masking layer.
  bool trivial_randomizers = false;
  // When non-empty (one entry per circuit qubit, values in [0, 8)), pins the
  // combined mask class - randomizer composed with the teleport frame - of
  // each input carrier. Lets audits average over all eight X^a P^b actions
  // exactly evenly instead of waiting for sampling noise to die down.
  std::vector<int> input_class_schedule;
  // When non-empty (one entry per gadget, one element per line slot), these
  // randomizers are applied instead of freshly drawn ones. Protocols use this
  // to install jointly sampled masks. Mutually exclusive with the other two
  // knobs.
  std::vector<std::vector<pauli::PXElement>> forced_randomizers;
};

// Consumes `input` (one handle per circuit qubit) and leaves the encoding's
// qubits in `reg`. Every carrier is touched a bounded number of times
// regardless of circuit depth; reg.op_count is the witness.
EncodeResult encode(qsim::Register& reg, const std::vector<qsim::Register::Handle>& input,
                    const DqreProgram& program, const EncodeOptions& options = {});

// What a simulator ignorant of the gate list and the input can produce: the
// same EPR topology with identity dynamics on fresh |0> inputs. Its quantum
// marginals match the real encoding's: maximally mixed everywhere.
EncodeResult simulate_encoding(qsim::Register& reg, const DqreProgram& program,
                               const EncodeOptions& options = {});

// Teleports the running state through the gadget chain, undoing randomizers
// and pushed-through Pauli frames as it goes. Returns the output carrier
// handles, which then hold exactly the circuit's output state. Throws if the
// labels do not match the program shape.
std::vector<qsim::Register::Handle> decode(qsim::Register& reg, const DqreProgram& program,
                                           const EncodedState& state,
                                           const DqreLabels& labels);

// Same walk, but the accumulated output-qubit Pauli frame is returned instead
// of applied: outputs[q] holds X^x Z^z (circuit output) with (x, z) =
// residual_frame[q]. A decoder that must hand the state onward still masked
// stops here.
struct DecodeOutcome {
  std::vector<qsim::Register::Handle> outputs;
  std::vector<std::pair<uint8_t, uint8_t>> residual_frame;
};
DecodeOutcome decode_masked(qsim::Register& reg, const DqreProgram& program,
                            const EncodedState& state, const DqreLabels& labels);

}  // namespace mpqc::dqre

#endif  // MPQC_DQRE_ENCODING_HPP_
