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

#ifndef MPQC_GMW_BUILDER_HPP_
#define MPQC_GMW_BUILDER_HPP_

#include <stdexcept>
#include <utility>
#include <vector>

#include "mpqc/gmw/bool_circuit.hpp"

namespace mpqc::gmw {

// Incremental construction of a BoolCircuit. Wires are handed out in call
// order; a party's private input vector lines up with its input() calls.
class CircuitBuilder {
 public:
  explicit CircuitBuilder(int num_parties) { c_.inputs.resize(num_parties); }

  int input(int party) {
    const int w = fresh();
    c_.inputs[party].push_back(w);
    return w;
  }

  int gate_not(int a) {
    const int w = fresh();
    c_.gates.push_back({BoolOp::NOT, w, {a}});
    return w;
  }

  int gate_and(int a, int b) {
    const int w = fresh();
    c_.gates.push_back({BoolOp::AND, w, {a, b}});
    return w;
  }

  int gate_xor(std::vector<int> ins) {
    const int w = fresh();
    c_.gates.push_back({BoolOp::XOR, w, std::move(ins)});
    return w;
  }

  int gate_xor2(int a, int b) { return gate_xor({a, b}); }

  void add_output(int w) { c_.outputs.push_back(w); }

  BoolCircuit finish() {
    c_.validate();
    return std::move(c_);
  }

 private:
  int fresh() { return c_.num_wires++; }

  BoolCircuit c_;
};

// Side-by-side composition: b's wires are renumbered to sit above a's, both
// circuits keep their internal structure, and the merged output list is a's
// outputs followed by b's. Per-party input vectors concatenate in the same
// order, so a party's joint input bits are its a-bits followed by its b-bits.
// Both circuits must agree on the party count.
inline BoolCircuit merge_circuits(const BoolCircuit& a, const BoolCircuit& b) {
  if (a.inputs.size() != b.inputs.size()) {
    throw std::invalid_argument("merge_circuits: party count mismatch");
  }
  BoolCircuit m = a;
  const int off = a.num_wires;
  m.num_wires += b.num_wires;
  for (size_t p = 0; p < b.inputs.size(); ++p) {
    for (int w : b.inputs[p]) m.inputs[p].push_back(w + off);
  }
  for (BoolGate g : b.gates) {
    g.out += off;
    for (int& w : g.in) w += off;
    m.gates.push_back(std::move(g));
  }
  for (int w : b.outputs) m.outputs.push_back(w + off);
  m.validate();
  return m;
}

}  // namespace mpqc::gmw

#endif  // MPQC_GMW_BUILDER_HPP_
