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

#include "mpqc/pauliframe/pauli_mask.hpp"

namespace mpqc::dqre {

namespace {

using Handle = qsim::Register::Handle;

// Mask classes 0..7 are the actions X^a P^b with a = cls >> 2, b = cls & 3.
pauli::PXElement class_element(int cls) {
  if (cls < 0 || cls > 7) throw std::invalid_argument("mask class out of range");
  return {static_cast<uint8_t>((cls >> 2) & 1), static_cast<uint8_t>(cls & 3), 0};
}

pauli::PXElement random_action(std::mt19937_64& rng) {
  return {static_cast<uint8_t>(rng() & 1), static_cast<uint8_t>(rng() & 3), 0};
}

// Applies a PX element to one register qubit; identity actions are skipped
// (their phase is global).
void apply_px(qsim::Register& reg, const pauli::PXElement& e, Handle h) {
  if (e.a == 0 && e.b == 0) return;
  reg.unitary1(pauli::px_matrix(e), h);
}

// The sandwich (X^a Z^b) P^-p (X^a Z^b)^-1: applied to X^a Z^b P^p |s>, it
// strips the P residue a T gate leaves inside the frame and keeps the frame
// itself classical.
pauli::PXElement p_stripper(pauli::MaskBit frame, uint8_t p) {
  const auto f = pauli::px_from_pauli(frame.a, frame.b);
  const pauli::PXElement p_inv{0, static_cast<uint8_t>((4 - (p & 3)) % 4), 0};
  return pauli::px_compose(pauli::px_compose(f, p_inv), pauli::px_invert(f));
}

EncodeResult encode_impl(qsim::Register& reg, const std::vector<Handle>& input,
                         const DqreProgram& program, const EncodeOptions& options,
                         bool apply_gates) {
  const int n = program.circuit.num_qubits;
  if (static_cast<int>(input.size()) != n) {
    throw std::invalid_argument("encode: one input handle per circuit qubit");
  }
  if (!options.input_class_schedule.empty() &&
      static_cast<int>(options.input_class_schedule.size()) != n) {
    throw std::invalid_argument("encode: class schedule width mismatch");
  }
  if (!options.forced_randomizers.empty()) {
    if (options.trivial_randomizers || !options.input_class_schedule.empty()) {
      throw std::invalid_argument("encode: forced randomizers exclude the other knobs");
    }
    if (options.forced_randomizers.size() != program.gadgets.size()) {
      throw std::invalid_argument("encode: one forced randomizer list per gadget");
    }
    for (size_t gi = 0; gi < program.gadgets.size(); ++gi) {
      if (options.forced_randomizers[gi].size() != program.gadgets[gi].lines.size()) {
        throw std::invalid_argument("encode: forced randomizer slot count mismatch");
      }
    }
  }

  EncodeResult res;
  const size_t num_gadgets = program.gadgets.size();
  res.state.in_halves.resize(num_gadgets);
  res.state.out_halves.resize(num_gadgets);
  res.labels.randomizers.resize(num_gadgets);

  for (size_t gi = 0; gi < num_gadgets; ++gi) {
    for (size_t s = 0; s < program.gadgets[gi].lines.size(); ++s) {
      auto [c, d] = reg.alloc_epr();
      res.state.in_halves[gi].push_back(c);
      res.state.out_halves[gi].push_back(d);
    }
  }

  // Input gadget: teleport the input in now. The outcomes become the initial
  // frame; the randomizer re-masks the carrier on top of it.
  for (int q = 0; q < n; ++q) {
    auto [x, z] = reg.bell_measure(input[q], res.state.in_halves[0][q]);
    res.labels.input_frame.emplace_back(static_cast<uint8_t>(x), static_cast<uint8_t>(z));
    pauli::PXElement r;
    if (!options.forced_randomizers.empty()) {
      r = options.forced_randomizers[0][q];
    } else if (options.trivial_randomizers) {
      r = pauli::px_identity();
    } else if (!options.input_class_schedule.empty()) {
      // Back-solve so that randomizer * teleport frame lands on the pinned
      // class; the randomizer alone stays uniform because the frame is.
      const auto target = class_element(options.input_class_schedule[q]);
      r = pauli::px_compose(target, pauli::px_invert(pauli::px_from_pauli(x, z)));
    } else {
      r = random_action(reg.rng());
    }
    res.labels.randomizers[0].push_back(r);
    apply_px(reg, r, res.state.out_halves[0][q]);
  }
  res.state.in_halves[0].clear();  // consumed by the measurements above

  // Gate gadgets: burn the gate into the carrier halves, then mask them.
  // Nothing here depends on anything earlier in the chain, which is what
  // keeps per-qubit work constant.
  for (size_t gi = 1; gi < num_gadgets; ++gi) {
    const auto& shape = program.gadgets[gi];
    const auto& gate = program.circuit.gates[shape.gate_index];
    if (apply_gates) {
      if (gate.kind == qsim::Gate::CNOT) {
        reg.gate(qsim::Gate::CNOT, res.state.out_halves[gi][0], res.state.out_halves[gi][1]);
      } else {
        reg.gate(gate.kind, res.state.out_halves[gi][0]);
      }
    }
    for (size_t s = 0; s < shape.lines.size(); ++s) {
      pauli::PXElement r;
      if (!options.forced_randomizers.empty()) {
        r = options.forced_randomizers[gi][s];
      } else if (options.trivial_randomizers) {
        r = pauli::px_identity();
      } else {
        r = random_action(reg.rng());
      }
      res.labels.randomizers[gi].push_back(r);
      apply_px(reg, r, res.state.out_halves[gi][s]);
    }
  }
  return res;
}

}  // namespace

EncodeResult encode(qsim::Register& reg, const std::vector<Handle>& input,
                    const DqreProgram& program, const EncodeOptions& options) {
  return encode_impl(reg, input, program, options, true);
}

EncodeResult simulate_encoding(qsim::Register& reg, const DqreProgram& program,
                               const EncodeOptions& options) {
  std::vector<Handle> blanks;
  for (int q = 0; q < program.circuit.num_qubits; ++q) blanks.push_back(reg.alloc_qubit());
  return encode_impl(reg, blanks, program, options, false);
}

DecodeOutcome decode_masked(qsim::Register& reg, const DqreProgram& program,
                            const EncodedState& state, const DqreLabels& labels) {
  const int n = program.circuit.num_qubits;
  const size_t num_gadgets = program.gadgets.size();
  if (labels.input_frame.size() != static_cast<size_t>(n) ||
      labels.randomizers.size() != num_gadgets ||
      state.in_halves.size() != num_gadgets || state.out_halves.size() != num_gadgets) {
    throw std::invalid_argument("decode: labels or state do not match the program");
  }
  for (size_t gi = 0; gi < num_gadgets; ++gi) {
    const size_t want = program.gadgets[gi].lines.size();
    if (labels.randomizers[gi].size() != want || state.out_halves[gi].size() != want ||
        (gi > 0 && state.in_halves[gi].size() != want)) {
      throw std::invalid_argument("decode: missing labels or halves for a gadget");
    }
  }

  std::vector<pauli::MaskBit> frame(n);
  std::vector<Handle> carrier(n, -1);

  for (int q = 0; q < n; ++q) {
    frame[q] = {labels.input_frame[q].first, labels.input_frame[q].second};
    apply_px(reg, pauli::px_invert(labels.randomizers[0][q]), state.out_halves[0][q]);
    carrier[q] = state.out_halves[0][q];
  }

  for (size_t gi = 1; gi < num_gadgets; ++gi) {
    const auto& shape = program.gadgets[gi];
    const auto& gate = program.circuit.gates[shape.gate_index];

    // Teleport the running state into the gadget; outcomes join the frame.
    for (size_t s = 0; s < shape.lines.size(); ++s) {
      const int q = shape.lines[s];
      auto [a, b] = reg.bell_measure(carrier[q], state.in_halves[gi][s]);
      frame[q].a ^= static_cast<uint8_t>(a);
      frame[q].b ^= static_cast<uint8_t>(b);
    }

    // Push the frame through the gate. Cliffords keep it Pauli; T leaves a
    // P residue that must be stripped physically.
    std::vector<pauli::PXElement> strip(shape.lines.size(), pauli::px_identity());
    if (gate.kind == qsim::Gate::CNOT) {
      auto [c2, t2] = pauli::conjugate_cnot(frame[shape.lines[0]], frame[shape.lines[1]]);
      frame[shape.lines[0]] = c2;
      frame[shape.lines[1]] = t2;
    } else if (gate.kind == qsim::Gate::T) {
      const auto tc = pauli::conjugate_through_T(frame[shape.lines[0]]);
      frame[shape.lines[0]] = tc.mask;
      if (tc.p) strip[0] = p_stripper(tc.mask, tc.p);
    } else {
      frame[shape.lines[0]] = pauli::conjugate1(gate.kind, frame[shape.lines[0]]);
    }

    for (size_t s = 0; s < shape.lines.size(); ++s) {
      const auto m =
          pauli::px_compose(strip[s], pauli::px_invert(labels.randomizers[gi][s]));
      apply_px(reg, m, state.out_halves[gi][s]);
      carrier[shape.lines[s]] = state.out_halves[gi][s];
    }
  }

  DecodeOutcome out;
  out.outputs = std::move(carrier);
  for (int q = 0; q < n; ++q) out.residual_frame.emplace_back(frame[q].a, frame[q].b);
  return out;
}

std::vector<Handle> decode(qsim::Register& reg, const DqreProgram& program,
                           const EncodedState& state, const DqreLabels& labels) {
  auto masked = decode_masked(reg, program, state, labels);
  for (int q = 0; q < program.circuit.num_qubits; ++q) {
    if (masked.residual_frame[q].first) reg.gate(qsim::Gate::X, masked.outputs[q]);
    if (masked.residual_frame[q].second) reg.gate(qsim::Gate::Z, masked.outputs[q]);
  }
  return masked.outputs;
}

}  // namespace mpqc::dqre
