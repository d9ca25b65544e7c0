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

#ifndef MPQC_BMR_GARBLE_HPP_
#define MPQC_BMR_GARBLE_HPP_

#include <array>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mpqc/bits.hpp"
#include "mpqc/crypto/prg.hpp"
#include "mpqc/gmw/bool_circuit.hpp"

namespace mpqc::bmr {

struct GarbleParams {
  int n = 2;  // parties contributing randomness
  int k = 4;  // seed bits per party
};

// Garbling works on 1- and 2-input gates with explicit truth tables; table[v]
// for unary gates, table[a*2 + b] for binary ones.
struct NormGate {
  int out = -1;
  std::vector<int> in;
  std::array<uint8_t, 4> table{};

  int arity() const { return static_cast<int>(in.size()); }
};

struct NormCircuit {
  int num_wires = 0;
  std::vector<std::vector<int>> inputs;
  std::vector<NormGate> gates;  // topological order
  std::vector<int> outputs;
  // Wires whose cleartext value the evaluator knows and supplies at
  // evaluation time. They carry no mask, and the garbled program publishes
  // both of their signal rows. Only XOR gates may read one.
  std::vector<int> free_inputs;

  int num_parties() const { return static_cast<int>(inputs.size()); }
  std::vector<int> input_wires_sorted() const;
  // Wires carrying a secret mask: everything except outputs and free inputs.
  std::vector<int> masked_wires() const;
  // Wires whose signals the signal circuit must produce: party-owned inputs
  // in ascending order, then free inputs in ascending order.
  std::vector<int> signal_seed_wires() const;
  bool is_output(int w) const;
  bool is_free(int w) const;
};

// Lowers a general circuit: k-ary XOR becomes a binary tree, NOT becomes a
// unary table gate, AND/XOR get their truth tables spelled out. Wire ids of
// the original circuit are preserved; tree temporaries are appended.
NormCircuit normalize(const gmw::BoolCircuit& c);

// Garbling assumes each non-output wire feeds exactly one gate and each
// output wire feeds none. Seeds are expanded by the consuming gate, so a
// second consumer would reuse pad material; output wires are unmasked, so a
// gate reading one would leak through its truth-table row selection. Also
// checks that free inputs are disjoint from outputs and party-owned inputs.
class FanOutViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
void enforce_fanout_one(const NormCircuit& c);

// One party's entire contribution: two seeds per wire and a mask share per
// masked wire. Output wires carry no mask so their settled values are
// readable, and free inputs carry none so the evaluator can select a row by
// the cleartext value; both kinds have their share slots pinned to zero.
struct PartyRandomness {
  std::vector<crypto::PrgSeed> seed0;  // per wire, value-0 seed
  std::vector<crypto::PrgSeed> seed1;  // per wire, value-1 seed
  BitVec lambda_share;                 // per wire; zero on outputs

  static PartyRandomness sample(const NormCircuit& c, int k, std::mt19937_64& rng);

  // 2kW + (masked wire count): the number of random bits actually drawn.
  size_t bit_count(const NormCircuit& c) const;
};

// Wire signal: every party's seed for the wire's masked value, then the
// masked value itself as the trailing selector bit. Length n*k + 1.
struct WireSignal {
  BitVec bits;

  uint8_t selector() const { return bits.at(bits.size() - 1); }
  crypto::PrgSeed seed_of(int party, int k) const;

  bool operator==(const WireSignal&) const = default;
};

WireSignal build_signal(const std::vector<crypto::PrgSeed>& seeds_for_value,
                        uint8_t masked_bit);

// The wire masks in the clear: XOR of all parties' shares. Trusted-dealer
// view; the shared execution never materializes this.
BitVec compute_lambda(const NormCircuit& c, const std::vector<PartyRandomness>& rand);

// Label for row (a, b) of a binary gate (or row a of a unary gate, b
// ignored): the encoding of the output signal for masked inputs (a, b),
// one-time padded by PRG expansions of the input-wire seeds.
BitVec compute_gate_label(const NormCircuit& c, const GarbleParams& p, int gate_idx,
                          int a, int b, const std::vector<PartyRandomness>& rand,
                          const BitVec& lambdas);

struct GateLabelSet {
  std::vector<BitVec> labels;  // 2 entries (unary) or 4 (binary, index a*2+b)
};

struct GarbledProgram {
  GarbleParams params;
  NormCircuit circuit;
  std::vector<GateLabelSet> gate_labels;                 // per gate
  std::vector<std::pair<int, WireSignal>> input_signals; // (wire, signal), wire asc
  // Both signal rows of every free input, wire ascending, indexed by value.
  std::vector<std::pair<int, std::array<WireSignal, 2>>> free_signals;

  std::vector<uint8_t> serialize() const;
  static GarbledProgram deserialize(const std::vector<uint8_t>& blob);
};

// Trusted-dealer garbling: all parties' randomness and inputs in one place.
// The shared execution must reproduce exactly these bytes.
GarbledProgram garble_dealer(const NormCircuit& c, const GarbleParams& p,
                             const std::vector<PartyRandomness>& rand,
                             const std::vector<BitVec>& inputs);

struct EvalResult {
  BitVec outputs;
  std::vector<WireSignal> signals;  // per wire (empty for unused slots)
};

// Walks the program gate by gate, unlocking one label per gate with the
// input signals' selector bits. Output wires are unmasked, so their selector
// bits are the cleartext result. free_values picks one row per free input,
// aligned with program.free_signals.
EvalResult bmr_evaluate(const GarbledProgram& program, const BitVec& free_values = {});

}  // namespace mpqc::bmr

#endif  // MPQC_BMR_GARBLE_HPP_
