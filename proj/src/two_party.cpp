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

#include "mpqc/protocols/two_party.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mpqc/bits.hpp"
#include "mpqc/crypto/ot.hpp"
#include "mpqc/dqre/encoding.hpp"
#include "mpqc/harness/network.hpp"
#include "protocol_wire.hpp"

namespace mpqc::protocols {

namespace {

using harness::Message;
using qsim::Gate;
using qsim::Register;
using Handle = Register::Handle;

// Applies the pad operator X^a Z^b (Z gate first, X gate second).
void apply_pad(Register& reg, Handle h, uint8_t a, uint8_t b) {
  if (b) reg.gate(Gate::Z, h);
  if (a) reg.gate(Gate::X, h);
}

// For each circuit line, the (gadget, slot) whose carrier half ends up as
// that line's output qubit: the last gadget touching the line, the input
// gadget if none does. This is the output map both parties must agree on.
std::vector<std::pair<int, int>> output_positions(const dqre::DqreProgram& program) {
  std::vector<std::pair<int, int>> pos(program.circuit.num_qubits);
  for (int q = 0; q < program.circuit.num_qubits; ++q) pos[q] = {0, q};
  for (size_t gi = 1; gi < program.gadgets.size(); ++gi) {
    const auto& lines = program.gadgets[gi].lines;
    for (size_t s = 0; s < lines.size(); ++s) pos[lines[s]] = {static_cast<int>(gi), static_cast<int>(s)};
  }
  return pos;
}

// Alice: pads and sends her input, receives the encoding, learns her lines'
// effective frames by oblivious transfer, decodes, forwards the result.
class AliceParty final : public harness::Party {
 public:
  AliceParty(Register& reg, const qsim::QuantumCircuit& f, std::vector<Handle> input,
             uint64_t seed)
      : reg_(reg), program_(dqre::compile(f)), input_(std::move(input)), rng_(seed) {}

  std::vector<Message> step(int iteration, const std::vector<Message>& inbox) override {
    std::vector<Message> out;
    if (iteration == 0) {
      key_ = qsim::QotpKey::random(static_cast<int>(input_.size()), rng_);
      for (size_t q = 0; q < input_.size(); ++q) {
        apply_pad(reg_, input_[q], key_.pairs[q].a, key_.pairs[q].b);
      }
      Message m{0, 1, "x-enc", {}};
      wire::put_handles(m.payload, input_);
      out.push_back(std::move(m));
      return out;
    }
    for (const auto& m : inbox) {
      if (m.tag == "encoding") {
        parse_encoding(m.payload);
        out.push_back(make_ot_requests());
      } else if (m.tag == "ot-resp") {
        finish_ot(m.payload);
        out.push_back(decode_and_forward());
        done_ = true;
      }
    }
    return out;
  }

  bool done() const override { return done_; }

  const std::vector<Handle>& outputs() const { return outputs_; }

 private:
  void parse_encoding(const std::vector<uint8_t>& payload) {
    size_t pos = 0;
    const uint32_t gadgets = get_u32(payload, pos);
    if (gadgets != program_.gadgets.size()) throw std::runtime_error("encoding: gadget count");
    for (uint32_t gi = 0; gi < gadgets; ++gi) {
      state_.in_halves.push_back(wire::get_handles(payload, pos));
      state_.out_halves.push_back(wire::get_handles(payload, pos));
    }
    for (uint32_t gi = 0; gi < gadgets; ++gi) {
      randomizers_.push_back(wire::get_px_list(payload, pos));
      if (randomizers_.back().size() != program_.gadgets[gi].lines.size()) {
        throw std::runtime_error("encoding: randomizer arity");
      }
    }
    const int n = program_.circuit.num_qubits;
    bob_frames_.assign(n, {0, 0});
    const uint32_t frames = get_u32(payload, pos);
    if (frames + input_.size() != static_cast<size_t>(n)) {
      throw std::runtime_error("encoding: frame count");
    }
    for (uint32_t i = 0; i < frames; ++i) {
      const int line = static_cast<int>(get_u32(payload, pos));
      if (line < static_cast<int>(input_.size()) || line >= n) {
        throw std::runtime_error("encoding: frame line id");
      }
      const auto bits = wire::get_frames(payload, pos);
      if (bits.size() != 1) throw std::runtime_error("encoding: frame entry");
      bob_frames_[line] = bits[0];
    }
    // Output map: Bob's claim of where each line's output carrier sits; it
    // must match the locally compiled program.
    const auto expect = output_positions(program_);
    const uint32_t entries = get_u32(payload, pos);
    if (entries != static_cast<uint32_t>(n)) throw std::runtime_error("encoding: output map size");
    for (uint32_t i = 0; i < entries; ++i) {
      const int line = static_cast<int>(get_u32(payload, pos));
      const int gi = static_cast<int>(get_u32(payload, pos));
      const int slot = static_cast<int>(get_u32(payload, pos));
      if (line < 0 || line >= n || expect[line] != std::make_pair(gi, slot)) {
        throw std::runtime_error("encoding: output map mismatch");
      }
    }
    if (pos != payload.size()) throw std::runtime_error("encoding: trailing bytes");
  }

  // One 1-of-2 transfer per pad key bit, line-ascending, x before z.
  Message make_ot_requests() {
    Message req{0, 1, "ot-req", {}};
    for (size_t q = 0; q < input_.size(); ++q) {
      for (int component = 0; component < 2; ++component) {
        const int choice = component == 0 ? key_.pairs[q].a : key_.pairs[q].b;
        ot_.emplace_back();
        put_bytes(req.payload, crypto::ot_begin(ot_.back(), 2, choice, rng_));
      }
    }
    return req;
  }

  void finish_ot(const std::vector<uint8_t>& payload) {
    size_t pos = 0;
    for (const auto& state : ot_) {
      const auto opened = crypto::ot_finish(state, get_bytes(payload, pos));
      if (opened.size() != 1) throw std::runtime_error("ot-resp: message size");
      eff_bits_.push_back(opened[0] & 1);
    }
    if (pos != payload.size()) throw std::runtime_error("ot-resp: trailing bytes");
  }

  Message decode_and_forward() {
    dqre::DqreLabels labels;
    labels.randomizers = randomizers_;
    const int n = program_.circuit.num_qubits;
    for (int q = 0; q < n; ++q) {
      if (q < static_cast<int>(input_.size())) {
        labels.input_frame.emplace_back(eff_bits_[2 * q], eff_bits_[2 * q + 1]);
      } else {
        labels.input_frame.push_back(bob_frames_[q]);
      }
    }
    outputs_ = dqre::decode(reg_, program_, state_, labels);
    const auto expect = output_positions(program_);
    for (int q = 0; q < n; ++q) {
      if (outputs_[q] != state_.out_halves[expect[q].first][expect[q].second]) {
        throw std::runtime_error("decode: output map violated");
      }
    }
    Message res{0, 1, "result", {}};
    wire::put_handles(res.payload, outputs_);
    return res;
  }

  Register& reg_;
  dqre::DqreProgram program_;
  std::vector<Handle> input_;
  std::mt19937_64 rng_;
  qsim::QotpKey key_;
  dqre::EncodedState state_;
  std::vector<std::vector<pauli::PXElement>> randomizers_;
  std::vector<std::pair<uint8_t, uint8_t>> bob_frames_;
  std::vector<crypto::OtReceiver> ot_;
  BitVec eff_bits_;
  std::vector<Handle> outputs_;
  bool done_ = false;
};

// Bob: encodes the circuit over the padded input and his own, withholding
// the frames of Alice's lines; serves them through oblivious transfer with
// the pad key folded in; receives the decoded output.
class BobParty final : public harness::Party {
 public:
  BobParty(Register& reg, const qsim::QuantumCircuit& f, std::vector<Handle> input,
           int alice_lines, uint64_t seed)
      : reg_(reg),
        program_(dqre::compile(f)),
        input_(std::move(input)),
        alice_lines_(alice_lines),
        rng_(seed) {}

  std::vector<Message> step(int, const std::vector<Message>& inbox) override {
    std::vector<Message> out;
    for (const auto& m : inbox) {
      if (m.tag == "x-enc") {
        out.push_back(make_encoding(m.payload));
      } else if (m.tag == "ot-req") {
        out.push_back(serve_ot(m.payload));
      } else if (m.tag == "result") {
        size_t pos = 0;
        outputs_ = wire::get_handles(m.payload, pos);
        if (outputs_.size() != static_cast<size_t>(program_.circuit.num_qubits)) {
          throw std::runtime_error("result: handle count");
        }
        done_ = true;
      }
    }
    return out;
  }

  bool done() const override { return done_; }

  const std::vector<Handle>& outputs() const { return outputs_; }

 private:
  Message make_encoding(const std::vector<uint8_t>& payload) {
    size_t pos = 0;
    auto all = wire::get_handles(payload, pos);
    if (all.size() != static_cast<size_t>(alice_lines_)) throw std::runtime_error("x-enc: handle count");
    all.insert(all.end(), input_.begin(), input_.end());
    enc_ = dqre::encode(reg_, all, program_);

    Message m{1, 0, "encoding", {}};
    put_u32(m.payload, static_cast<uint32_t>(program_.gadgets.size()));
    for (size_t gi = 0; gi < program_.gadgets.size(); ++gi) {
      wire::put_handles(m.payload, enc_.state.in_halves[gi]);
      wire::put_handles(m.payload, enc_.state.out_halves[gi]);
    }
    for (const auto& r : enc_.labels.randomizers) wire::put_px_list(m.payload, r);
    // Teleport frames of Bob's own lines ride in the clear, keyed by line;
    // Alice's stay here until the transfers fold the pad key into them.
    const int n = program_.circuit.num_qubits;
    put_u32(m.payload, static_cast<uint32_t>(n - alice_lines_));
    for (int q = alice_lines_; q < n; ++q) {
      put_u32(m.payload, static_cast<uint32_t>(q));
      wire::put_frames(m.payload, {enc_.labels.input_frame[q]});
    }
    const auto positions = output_positions(program_);
    put_u32(m.payload, static_cast<uint32_t>(n));
    for (int q = 0; q < n; ++q) {
      put_u32(m.payload, static_cast<uint32_t>(q));
      put_u32(m.payload, static_cast<uint32_t>(positions[q].first));
      put_u32(m.payload, static_cast<uint32_t>(positions[q].second));
    }
    return m;
  }

  // Request i carries Alice's choice for line i/2, component i%2. The two
  // slot messages are frame^0 and frame^1, so the opened slot is frame^key:
  // exactly the correction for a carrier holding pad and teleport combined.
  Message serve_ot(const std::vector<uint8_t>& payload) {
    Message resp{1, 0, "ot-resp", {}};
    size_t pos = 0;
    for (int q = 0; q < alice_lines_; ++q) {
      const auto& frame = enc_.labels.input_frame[q];
      for (int component = 0; component < 2; ++component) {
        const uint8_t bit = component == 0 ? frame.first : frame.second;
        const auto request = get_bytes(payload, pos);
        const std::vector<std::vector<uint8_t>> slots = {
            {static_cast<uint8_t>(bit ^ 0)}, {static_cast<uint8_t>(bit ^ 1)}};
        put_bytes(resp.payload, crypto::ot_send(request, slots, rng_));
      }
    }
    if (pos != payload.size()) throw std::runtime_error("ot-req: trailing bytes");
    return resp;
  }

  Register& reg_;
  dqre::DqreProgram program_;
  std::vector<Handle> input_;
  int alice_lines_;
  std::mt19937_64 rng_;
  dqre::EncodeResult enc_;
  std::vector<Handle> outputs_;
  bool done_ = false;
};

}  // namespace

ProtocolResult run_two_party(Register& reg, const qsim::QuantumCircuit& f,
                             const std::vector<Handle>& alice_input,
                             const std::vector<Handle>& bob_input, uint64_t seed) {
  if (alice_input.size() + bob_input.size() != static_cast<size_t>(f.num_qubits)) {
    throw std::invalid_argument("run_two_party: inputs must cover the circuit lines");
  }
  AliceParty alice(reg, f, alice_input, mix_seed(seed, 0));
  BobParty bob(reg, f, bob_input, static_cast<int>(alice_input.size()), mix_seed(seed, 1));
  auto run = harness::run_protocol({&alice, &bob});

  ProtocolResult res;
  res.outputs = bob.outputs();
  res.per_party = {alice.outputs(), bob.outputs()};
  res.rounds_used = run.rounds_used;
  res.transcript = std::move(run.transcript);
  return res;
}

}  // namespace mpqc::protocols
