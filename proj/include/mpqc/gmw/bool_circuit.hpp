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

#ifndef MPQC_GMW_BOOL_CIRCUIT_HPP_
#define MPQC_GMW_BOOL_CIRCUIT_HPP_

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpqc/bits.hpp"

namespace mpqc::gmw {

// NOT is unary, AND binary, XOR takes any arity >= 1.
enum class BoolOp : uint8_t { NOT, XOR, AND };

inline const char* bool_op_name(BoolOp op) {
  switch (op) {
    case BoolOp::NOT: return "NOT";
    case BoolOp::XOR: return "XOR";
    case BoolOp::AND: return "AND";
  }
  return "?";
}

struct BoolGate {
  BoolOp op;
  int out;
  std::vector<int> in;
};

// Straight-line boolean circuit in single-assignment form: wires [0, n) are
// written exactly once, either as some party's input or as a gate output,
// and every read happens after the write.
struct BoolCircuit {
  int num_wires = 0;
  std::vector<std::vector<int>> inputs;  // inputs[p] = wires fed by party p
  std::vector<BoolGate> gates;
  std::vector<int> outputs;

  int num_parties() const { return static_cast<int>(inputs.size()); }

  void validate() const {
    std::vector<int> writer(num_wires, -1);  // -2 = input, else gate index
    for (size_t p = 0; p < inputs.size(); ++p) {
      for (int w : inputs[p]) {
        check_wire(w);
        if (writer[w] != -1) throw std::invalid_argument("wire written twice");
        writer[w] = -2;
      }
    }
    std::vector<bool> ready(num_wires, false);
    for (int w = 0; w < num_wires; ++w) ready[w] = writer[w] == -2;
    for (size_t g = 0; g < gates.size(); ++g) {
      const auto& gate = gates[g];
      size_t want = gate.op == BoolOp::NOT ? 1 : gate.op == BoolOp::AND ? 2 : gate.in.size();
      if (gate.in.empty() || gate.in.size() != want) {
        throw std::invalid_argument(std::string(bool_op_name(gate.op)) + " gate arity");
      }
      for (int w : gate.in) {
        check_wire(w);
        if (!ready[w]) throw std::invalid_argument("gate reads unwritten wire");
      }
      check_wire(gate.out);
      if (writer[gate.out] != -1) throw std::invalid_argument("wire written twice");
      writer[gate.out] = static_cast<int>(g);
      ready[gate.out] = true;
    }
    if (outputs.empty()) throw std::invalid_argument("circuit has no outputs");
    for (int w : outputs) {
      check_wire(w);
      if (!ready[w]) throw std::invalid_argument("output wire never written");
    }
  }

  // AND nesting level per wire: inputs at 0; an AND output is one deeper
  // than its deepest operand; XOR/NOT are free.
  std::vector<int> wire_and_levels() const {
    std::vector<int> level(num_wires, 0);
    for (const auto& g : gates) {
      int m = 0;
      for (int w : g.in) m = std::max(m, level[w]);
      level[g.out] = m + (g.op == BoolOp::AND ? 1 : 0);
    }
    return level;
  }

  int and_depth() const {
    auto level = wire_and_levels();
    int d = 0;
    for (const auto& g : gates) {
      if (g.op == BoolOp::AND) d = std::max(d, level[g.out]);
    }
    return d;
  }

  // AND gate indices grouped by level (layer t holds gates at level t+1).
  std::vector<std::vector<int>> and_layers() const {
    auto level = wire_and_levels();
    std::vector<std::vector<int>> layers(and_depth());
    for (size_t g = 0; g < gates.size(); ++g) {
      if (gates[g].op == BoolOp::AND) layers[level[gates[g].out] - 1].push_back(static_cast<int>(g));
    }
    return layers;
  }

  bool xor_only() const {
    return std::none_of(gates.begin(), gates.end(),
                        [](const BoolGate& g) { return g.op == BoolOp::AND; });
  }

 private:
  void check_wire(int w) const {
    if (w < 0 || w >= num_wires) throw std::invalid_argument("wire index out of range");
  }
};

// Reference evaluation in the clear; the oracle every shared-execution test
// compares against.
inline BitVec eval_plaintext(const BoolCircuit& c, const std::vector<BitVec>& party_inputs) {
  if (party_inputs.size() != c.inputs.size()) {
    throw std::invalid_argument("party count mismatch");
  }
  std::vector<uint8_t> wire(c.num_wires, 0);
  for (size_t p = 0; p < c.inputs.size(); ++p) {
    if (party_inputs[p].size() != c.inputs[p].size()) {
      throw std::invalid_argument("input length mismatch for party " + std::to_string(p));
    }
    for (size_t i = 0; i < c.inputs[p].size(); ++i) {
      wire[c.inputs[p][i]] = party_inputs[p][i] & 1;
    }
  }
  for (const auto& g : c.gates) {
    switch (g.op) {
      case BoolOp::NOT:
        wire[g.out] = wire[g.in[0]] ^ 1;
        break;
      case BoolOp::XOR: {
        uint8_t v = 0;
        for (int w : g.in) v ^= wire[w];
        wire[g.out] = v;
        break;
      }
      case BoolOp::AND:
        wire[g.out] = wire[g.in[0]] & wire[g.in[1]];
        break;
    }
  }
  BitVec out;
  out.reserve(c.outputs.size());
  for (int w : c.outputs) out.push_back(wire[w]);
  return out;
}

}  // namespace mpqc::gmw

#endif  // MPQC_GMW_BOOL_CIRCUIT_HPP_
