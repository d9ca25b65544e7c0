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

#ifndef MPQC_HARNESS_CORPUS_HPP_
#define MPQC_HARNESS_CORPUS_HPP_

#include <vector>

#include "mpqc/gmw/bool_circuit.hpp"
#include "mpqc/qsim/state_vector.hpp"

namespace mpqc::harness {

// Fixed bank of small quantum circuits: at most 4 qubits and 8 gates each,
// jointly covering every gate kind, with a T-free subset for the Clifford
// fast path and several members carrying two or more T gates. The bank is
// the shared ground truth for correctness sweeps; entries never change
// order, so seeds stay meaningful across runs.
std::vector<qsim::QuantumCircuit> quantum_corpus();

// Fixed bank of boolean circuits with at most 8 input bits each - small
// enough for exhaustive plaintext comparison - spanning XOR/AND/NOT shapes
// and two- and three-party input layouts.
std::vector<gmw::BoolCircuit> boolean_corpus();

// Depth-scalable families: each step appends one block of gates without
// changing the interface, so a depth sweep varies gate count 20x while
// protocols keep their round counts. The general family carries a T gate
// per block; the Clifford family does not.
qsim::QuantumCircuit layered_family(int depth);
qsim::QuantumCircuit layered_clifford_family(int depth);

// AND ladder with one AND level per depth step, inputs dealt round-robin
// over the parties: the negative control whose shared evaluation must get
// slower in rounds as it gets deeper.
gmw::BoolCircuit and_ladder(int num_parties, int depth);

// Near-even contiguous split of `num_qubits` circuit lines over n parties,
// arranged so party 0 never owns every line (a single line goes to party 1).
std::vector<int> split_sizes(int num_qubits, int n);

}  // namespace mpqc::harness

#endif  // MPQC_HARNESS_CORPUS_HPP_
