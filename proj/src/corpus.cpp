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

#include "mpqc/harness/corpus.hpp"

#include <stdexcept>

#include "mpqc/gmw/builder.hpp"

namespace mpqc::harness {

namespace {

using qsim::Gate;
using qsim::QuantumCircuit;

}  // namespace

std::vector<QuantumCircuit> quantum_corpus() {
  std::vector<QuantumCircuit> cs;

  // One qubit.
  cs.push_back({1, {}});
  cs.push_back({1, {{Gate::H, 0}}});
  cs.push_back({1, {{Gate::X, 0}, {Gate::Z, 0}}});
  cs.push_back({1, {{Gate::P, 0}, {Gate::H, 0}}});
  cs.push_back({1, {{Gate::T, 0}, {Gate::H, 0}, {Gate::T, 0}, {Gate::H, 0}}});
  cs.push_back({1, {{Gate::H, 0}, {Gate::X, 0}, {Gate::H, 0}, {Gate::Z, 0}}});
  cs.push_back({1, {{Gate::T, 0}, {Gate::P, 0}, {Gate::T, 0}, {Gate::H, 0}}});
  cs.push_back({1, {{Gate::T, 0}, {Gate::T, 0}, {Gate::P, 0}}});  // T^2 = P

  // Two qubits.
  cs.push_back({2, {{Gate::CNOT, 0, 1}}});
  cs.push_back({2, {{Gate::H, 0}, {Gate::CNOT, 0, 1}}});
  cs.push_back({2, {{Gate::CNOT, 0, 1}, {Gate::CNOT, 1, 0}, {Gate::CNOT, 0, 1}}});  // swap
  cs.push_back({2, {{Gate::H, 0}, {Gate::H, 1}, {Gate::CNOT, 0, 1}, {Gate::P, 1}}});
  cs.push_back({2,
                {{Gate::T, 0},
                 {Gate::CNOT, 0, 1},
                 {Gate::T, 1},
                 {Gate::H, 0},
                 {Gate::CNOT, 1, 0},
                 {Gate::P, 0}}});
  cs.push_back({2, {{Gate::X, 0}, {Gate::CNOT, 0, 1}, {Gate::Z, 1}, {Gate::CNOT, 1, 0}}});
  cs.push_back({2, {{Gate::H, 1}, {Gate::CNOT, 1, 0}, {Gate::H, 0}, {Gate::H, 1}}});
  cs.push_back({2,
                {{Gate::P, 0},
                 {Gate::P, 1},
                 {Gate::CNOT, 0, 1},
                 {Gate::P, 1},
                 {Gate::CNOT, 0, 1}}});
  cs.push_back({2, {{Gate::H, 0}, {Gate::T, 0}, {Gate::CNOT, 0, 1}, {Gate::H, 1}, {Gate::T, 1}}});
  cs.push_back({2, {{Gate::CNOT, 0, 1}, {Gate::T, 1}, {Gate::CNOT, 0, 1}, {Gate::T, 0}}});
  cs.push_back({2, {{Gate::Z, 0}, {Gate::H, 0}, {Gate::CNOT, 0, 1}, {Gate::X, 1}}});

  // Three qubits.
  cs.push_back({3, {{Gate::CNOT, 0, 1}, {Gate::CNOT, 1, 2}}});
  cs.push_back({3, {{Gate::H, 0}, {Gate::CNOT, 0, 1}, {Gate::CNOT, 1, 2}}});  // GHZ
  cs.push_back({3,
                {{Gate::H, 0},
                 {Gate::CNOT, 0, 1},
                 {Gate::CNOT, 1, 2},
                 {Gate::T, 2},
                 {Gate::X, 0},
                 {Gate::T, 1},
                 {Gate::H, 2},
                 {Gate::CNOT, 0, 2}}});
  cs.push_back({3, {{Gate::CNOT, 0, 1}, {Gate::CNOT, 1, 2}, {Gate::CNOT, 2, 0}}});
  cs.push_back({3,
                {{Gate::H, 0},
                 {Gate::H, 1},
                 {Gate::H, 2},
                 {Gate::CNOT, 0, 2},
                 {Gate::P, 1}}});
  cs.push_back({3,
                {{Gate::T, 0},
                 {Gate::CNOT, 0, 1},
                 {Gate::H, 2},
                 {Gate::CNOT, 1, 2},
                 {Gate::T, 2},
                 {Gate::Z, 0}}});
  cs.push_back({3, {{Gate::X, 1}, {Gate::CNOT, 1, 0}, {Gate::CNOT, 1, 2}, {Gate::H, 1}}});
  cs.push_back({3,
                {{Gate::P, 2},
                 {Gate::CNOT, 2, 1},
                 {Gate::P, 1},
                 {Gate::CNOT, 0, 1},
                 {Gate::H, 0}}});

  // Four qubits.
  cs.push_back({4, {{Gate::CNOT, 0, 1}, {Gate::CNOT, 2, 3}}});
  cs.push_back({4,
                {{Gate::H, 0},
                 {Gate::CNOT, 0, 1},
                 {Gate::CNOT, 0, 2},
                 {Gate::CNOT, 0, 3}}});  // GHZ fan-out
  cs.push_back({4,
                {{Gate::H, 0},
                 {Gate::CNOT, 0, 1},
                 {Gate::T, 1},
                 {Gate::CNOT, 2, 3},
                 {Gate::T, 3},
                 {Gate::Z, 2},
                 {Gate::CNOT, 1, 2},
                 {Gate::P, 3}}});
  cs.push_back({4,
                {{Gate::H, 0},
                 {Gate::H, 2},
                 {Gate::CNOT, 0, 1},
                 {Gate::CNOT, 2, 3},
                 {Gate::CNOT, 1, 2},
                 {Gate::P, 3},
                 {Gate::Z, 0}}});
  cs.push_back({4,
                {{Gate::T, 0},
                 {Gate::T, 1},
                 {Gate::CNOT, 0, 2},
                 {Gate::CNOT, 1, 3},
                 {Gate::H, 2},
                 {Gate::H, 3}}});
  cs.push_back({4, {{Gate::X, 0}, {Gate::Z, 1}, {Gate::P, 2}, {Gate::H, 3}, {Gate::CNOT, 3, 0}}});

  return cs;
}

std::vector<gmw::BoolCircuit> boolean_corpus() {
  std::vector<gmw::BoolCircuit> cs;

  {  // XOR of one bit per party.
    gmw::CircuitBuilder b(2);
    b.add_output(b.gate_xor2(b.input(0), b.input(1)));
    cs.push_back(b.finish());
  }
  {  // AND of one bit per party.
    gmw::CircuitBuilder b(2);
    b.add_output(b.gate_and(b.input(0), b.input(1)));
    cs.push_back(b.finish());
  }
  {  // (a AND b) XOR c.
    gmw::CircuitBuilder b(2);
    const int a = b.input(0), c = b.input(0), x = b.input(1);
    b.add_output(b.gate_xor2(b.gate_and(a, x), c));
    cs.push_back(b.finish());
  }
  {  // Majority of three bits, each fed in twice to keep every fan-out at 1.
    gmw::CircuitBuilder b(2);
    const int x1 = b.input(0), x2 = b.input(0), y1 = b.input(0);
    const int y2 = b.input(1), z1 = b.input(1), z2 = b.input(1);
    b.add_output(b.gate_xor(
        {b.gate_and(x1, y1), b.gate_and(y2, z1), b.gate_and(x2, z2)}));
    cs.push_back(b.finish());
  }
  {  // Parity of four bits.
    gmw::CircuitBuilder b(2);
    b.add_output(b.gate_xor({b.input(0), b.input(0), b.input(1), b.input(1)}));
    cs.push_back(b.finish());
  }
  {  // One-bit full adder over duplicated inputs: sum and carry of a + x + c.
    gmw::CircuitBuilder b(2);
    const int a1 = b.input(0), a2 = b.input(0), a3 = b.input(0);
    const int c1 = b.input(0), c2 = b.input(0);
    const int x1 = b.input(1), x2 = b.input(1), x3 = b.input(1);
    b.add_output(b.gate_xor({a1, x1, c1}));
    b.add_output(b.gate_xor2(b.gate_and(a2, x2), b.gate_and(b.gate_xor2(a3, x3), c2)));
    cs.push_back(b.finish());
  }
  {  // Three-party AND chain.
    gmw::CircuitBuilder b(3);
    b.add_output(b.gate_and(b.gate_and(b.input(0), b.input(1)), b.input(2)));
    cs.push_back(b.finish());
  }
  {  // Three-party (a XOR b) AND c with a negation.
    gmw::CircuitBuilder b(3);
    const int a = b.input(0), x = b.input(1), c = b.input(2);
    b.add_output(b.gate_and(b.gate_xor2(a, x), b.gate_not(c)));
    cs.push_back(b.finish());
  }
  {  // Multiplexer: s selects between x and y (y fed in twice).
    gmw::CircuitBuilder b(2);
    const int s = b.input(0), x = b.input(1), y1 = b.input(1), y2 = b.input(1);
    b.add_output(b.gate_xor2(y1, b.gate_and(s, b.gate_xor2(x, y2))));
    cs.push_back(b.finish());
  }
  {  // NAND.
    gmw::CircuitBuilder b(2);
    b.add_output(b.gate_not(b.gate_and(b.input(0), b.input(1))));
    cs.push_back(b.finish());
  }
  {  // Equality of two 4-bit strings: the full 8-input member.
    gmw::CircuitBuilder b(2);
    std::vector<int> x, y;
    for (int i = 0; i < 4; ++i) x.push_back(b.input(0));
    for (int i = 0; i < 4; ++i) y.push_back(b.input(1));
    std::vector<int> eq;
    for (int i = 0; i < 4; ++i) eq.push_back(b.gate_not(b.gate_xor2(x[i], y[i])));
    b.add_output(b.gate_and(b.gate_and(eq[0], eq[1]), b.gate_and(eq[2], eq[3])));
    cs.push_back(b.finish());
  }
  {  // Inner product mod 2 of two 3-bit vectors.
    gmw::CircuitBuilder b(2);
    std::vector<int> x, y;
    for (int i = 0; i < 3; ++i) x.push_back(b.input(0));
    for (int i = 0; i < 3; ++i) y.push_back(b.input(1));
    std::vector<int> terms;
    for (int i = 0; i < 3; ++i) terms.push_back(b.gate_and(x[i], y[i]));
    b.add_output(b.gate_xor(std::move(terms)));
    cs.push_back(b.finish());
  }

  return cs;
}

qsim::QuantumCircuit layered_family(int depth) {
  if (depth < 1) throw std::invalid_argument("layered_family: depth must be positive");
  QuantumCircuit c{2, {}};
  for (int d = 0; d < depth; ++d) {
    c.gates.push_back({Gate::T, 0});
    c.gates.push_back({Gate::H, 1});
    c.gates.push_back({Gate::CNOT, 0, 1});
    c.gates.push_back({Gate::P, 1});
  }
  return c;
}

qsim::QuantumCircuit layered_clifford_family(int depth) {
  if (depth < 1) throw std::invalid_argument("layered_clifford_family: depth must be positive");
  QuantumCircuit c{2, {}};
  for (int d = 0; d < depth; ++d) {
    c.gates.push_back({Gate::H, 0});
    c.gates.push_back({Gate::P, 1});
    c.gates.push_back({Gate::CNOT, 0, 1});
    c.gates.push_back({Gate::Z, 0});
  }
  return c;
}

gmw::BoolCircuit and_ladder(int num_parties, int depth) {
  if (num_parties < 2) throw std::invalid_argument("and_ladder: need at least two parties");
  if (depth < 1) throw std::invalid_argument("and_ladder: depth must be positive");
  gmw::CircuitBuilder b(num_parties);
  int acc = b.input(0);
  for (int d = 1; d <= depth; ++d) acc = b.gate_and(acc, b.input(d % num_parties));
  b.add_output(acc);
  return b.finish();
}

std::vector<int> split_sizes(int num_qubits, int n) {
  if (n < 2) throw std::invalid_argument("split_sizes: need at least two parties");
  if (num_qubits < 1) throw std::invalid_argument("split_sizes: need at least one line");
  std::vector<int> sizes(n, num_qubits / n);
  for (int p = 0; p < num_qubits % n; ++p) sizes[p] += 1;
  if (sizes[0] == num_qubits) {  // keep at least one line away from party 0
    sizes[0] -= 1;
    sizes[1] += 1;
  }
  return sizes;
}

}  // namespace mpqc::harness
