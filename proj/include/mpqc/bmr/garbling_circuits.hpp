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

#ifndef MPQC_BMR_GARBLING_CIRCUITS_HPP_
#define MPQC_BMR_GARBLING_CIRCUITS_HPP_

#include <vector>

#include "mpqc/bits.hpp"
#include "mpqc/bmr/garble.hpp"
#include "mpqc/gmw/bool_circuit.hpp"

namespace mpqc::bmr {

// The garbling function expressed as three shallow boolean circuits, so the
// whole garbled program can be produced by one constant-round shared
// execution regardless of how deep the circuit being garbled is. PRG
// expansions enter as party-local private inputs, which is what keeps the
// circuits shallow.
//
// Output orderings (the dealer must be matched bit for bit):
//   lambda: mask of each masked wire, ascending wire id.
//   signal: for each party-owned input wire ascending, n*k seed bits then the
//           masked bit; then for each free input ascending, the n*k seed bits
//           of value 0 then of value 1 (their trailing selector bits are the
//           public constants 0 and 1, appended by the caller).
//   label:  for each gate in circuit order, rows ascending (a*2+b, or a for
//           unary gates), n*k+1 bits per row.
//
// Private input layouts per party are defined by the *_private_inputs
// helpers below; the builder enumerates input wires in exactly that order.
struct GarblingCircuits {
  gmw::BoolCircuit lambda_circuit;
  gmw::BoolCircuit signal_circuit;
  gmw::BoolCircuit label_circuit;

  // XOR/AND layer depth (NOT is free), fixed small constants by construction.
  int lambda_depth = 0;
  int signal_depth = 0;
  int label_depth = 0;
};

GarblingCircuits build_garbling_circuits(const NormCircuit& c, const GarbleParams& p);

// Reassembles an evaluator-ready program from the revealed outputs of the
// signal and label circuits, appending the public selector constants of
// free-input rows. Byte-identical to what garble_dealer produces from the
// same randomness and inputs.
GarbledProgram assemble_program(const NormCircuit& c, const GarbleParams& p,
                                const BitVec& signal_bits, const BitVec& label_bits);

// Layer depth of a circuit counting XOR and AND as one layer each and NOT as
// wiring.
int xor_and_depth(const gmw::BoolCircuit& c);

// Party-side assembly of private inputs, mirroring the builder's layouts.
// lambda: mask share of each masked wire, ascending.
BitVec lambda_private_inputs(const NormCircuit& c, const PartyRandomness& r);

// signal: own cleartext input bits (c.inputs[party] order), then mask shares
// as above, then both seeds (value 0 then 1) of each wire in
// signal_seed_wires() order (owned inputs ascending, then free inputs).
BitVec signal_private_inputs(const NormCircuit& c, int party, const PartyRandomness& r,
                             const BitVec& my_x);

// label: mask shares, then both seeds of each gate's output wire in circuit
// order, then PRG expansions: per gate, per input position, per seed value,
// per selector (binary gates expand under both selectors, unary under 0).
BitVec label_private_inputs(const NormCircuit& c, const GarbleParams& p,
                            const PartyRandomness& r);

}  // namespace mpqc::bmr

#endif  // MPQC_BMR_GARBLING_CIRCUITS_HPP_
