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

#include "mpqc/protocols/multi_party.hpp"

#include <cstdint>
#include <iterator>
#include <map>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mpqc/bits.hpp"
#include "mpqc/bmr/garble.hpp"
#include "mpqc/bmr/garbling_circuits.hpp"
#include "mpqc/dqre/encoding.hpp"
#include "mpqc/gmw/builder.hpp"
#include "mpqc/gmw/engine.hpp"
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

// Lines not owned by party 0, ascending. Only these need the offset program:
// party 0 knows its own pads.
std::vector<int> foreign_lines(const std::vector<int>& owner) {
  std::vector<int> lines;
  for (size_t q = 0; q < owner.size(); ++q) {
    if (owner[q] != 0) lines.push_back(static_cast<int>(q));
  }
  return lines;
}

// The offset circuit: one XOR per foreign frame bit, outcome XOR pad key.
// Outcome bits are free inputs (party 0 supplies them at evaluation time);
// key bits are the owning party's private inputs, lines ascending, x then z.
bmr::NormCircuit build_offset_circuit(const std::vector<int>& owner, int num_parties) {
  const auto foreign = foreign_lines(owner);
  const int m = static_cast<int>(foreign.size());
  bmr::NormCircuit c;
  c.num_wires = 6 * m;
  c.inputs.resize(num_parties);
  for (int i = 0; i < 2 * m; ++i) c.free_inputs.push_back(i);
  for (int i = 0; i < m; ++i) {
    c.inputs[owner[foreign[i]]].push_back(2 * m + 2 * i);
    c.inputs[owner[foreign[i]]].push_back(2 * m + 2 * i + 1);
  }
  for (int j = 0; j < 2 * m; ++j) {
    c.gates.push_back({4 * m + j, {j, 2 * m + j}, {0, 1, 1, 0}});
    c.outputs.push_back(4 * m + j);
  }
  return c;
}

// Per-slot randomizer aggregation: every party contributes five bits per
// gadget slot (a, b low, b high, c low, c high) and the joint element is
// their bitwise XOR. Not the group product - it is the parameterization that
// is XORed - but any n-1 shares leave the result uniform over all 32
// elements, which is the property the masking needs.
gmw::BoolCircuit build_aggregation_circuit(int num_parties, int total_slots) {
  gmw::CircuitBuilder b(num_parties);
  std::vector<std::vector<int>> w(num_parties);
  for (int p = 0; p < num_parties; ++p) {
    for (int i = 0; i < 5 * total_slots; ++i) w[p].push_back(b.input(p));
  }
  for (int i = 0; i < 5 * total_slots; ++i) {
    std::vector<int> terms;
    for (int p = 0; p < num_parties; ++p) terms.push_back(w[p][i]);
    b.add_output(b.gate_xor(std::move(terms)));
  }
  return b.finish();
}

pauli::PXElement px_from_five_bits(const uint8_t* bits) {
  return {static_cast<uint8_t>(bits[0] & 1),
          static_cast<uint8_t>((bits[1] & 1) | ((bits[2] & 1) << 1)),
          static_cast<uint8_t>((bits[3] & 1) | ((bits[4] & 1) << 1))};
}

// One protocol participant. Party 0 is the designated holder of quantum
// state; every party additionally runs its leg of the embedded joint
// computation, whose messages are relayed unchanged.
class MultiPartyMember final : public harness::Party {
 public:
  MultiPartyMember(Register& reg, const qsim::QuantumCircuit& f, int me, int num_parties,
                   std::vector<int> owner, std::vector<Handle> own_input, int k, uint64_t seed)
      : reg_(reg),
        me_(me),
        n_(num_parties),
        owner_(std::move(owner)),
        input_(std::move(own_input)),
        rng_(seed),
        program_(dqre::compile(f)),
        params_{num_parties, k} {
    offset_ = build_offset_circuit(owner_, n_);
    const auto gc = bmr::build_garbling_circuits(offset_, params_);
    signal_len_ = gc.signal_circuit.outputs.size();
    label_len_ = gc.label_circuit.outputs.size();
    for (const auto& g : program_.gadgets) total_slots_ += static_cast<int>(g.lines.size());
    combined_ = gmw::merge_circuits(gmw::merge_circuits(gc.signal_circuit, gc.label_circuit),
                                    build_aggregation_circuit(n_, total_slots_));

    key_ = qsim::QotpKey::random(static_cast<int>(input_.size()), rng_);
    rand_ = bmr::PartyRandomness::sample(offset_, params_.k, rng_);
    agg_share_ = random_bits(5 * static_cast<size_t>(total_slots_), rng_);

    BitVec key_bits;
    if (me_ != 0) {  // party 0 owns no offset wires
      for (const auto& pair : key_.pairs) {
        key_bits.push_back(pair.a);
        key_bits.push_back(pair.b);
      }
    }
    BitVec inner_in = bmr::signal_private_inputs(offset_, me_, rand_, key_bits);
    const BitVec lab_in = bmr::label_private_inputs(offset_, params_, rand_);
    inner_in.insert(inner_in.end(), lab_in.begin(), lab_in.end());
    inner_in.insert(inner_in.end(), agg_share_.begin(), agg_share_.end());

    gmw::GmwOptions gopt;
    gopt.reveal_to = 0;
    inner_ = std::make_unique<gmw::GmwParty>(combined_, me_, inner_in, mix_seed(seed, 0x6d7063),
                                             gopt);
  }

  std::vector<Message> step(int iteration, const std::vector<Message>& inbox) override {
    std::vector<Message> out;
    std::vector<Message> inner_inbox;
    for (const auto& m : inbox) {
      if (m.tag == "input") {
        if (me_ == 0) {
          size_t pos = 0;
          foreign_input_[m.from] = wire::get_handles(m.payload, pos);
        }
      } else if (m.tag == "result") {
        size_t pos = 0;
        outputs_ = wire::get_handles(m.payload, pos);
      } else {
        inner_inbox.push_back(m);
      }
    }

    if (iteration == 0) {
      for (size_t i = 0; i < input_.size(); ++i) {
        apply_pad(reg_, input_[i], key_.pairs[i].a, key_.pairs[i].b);
      }
      for (int p = 0; p < n_; ++p) {
        if (p == me_) continue;
        Message m{me_, p, "input", {}};
        wire::put_handles(m.payload, input_);
        out.push_back(std::move(m));
      }
    }

    if (!inner_->done()) {
      auto msgs = inner_->step(iteration, inner_inbox);
      out.insert(out.end(), std::make_move_iterator(msgs.begin()),
                 std::make_move_iterator(msgs.end()));
    }

    if (me_ == 0 && inner_->done() && !result_sent_) {
      evaluate();
      for (int p = 1; p < n_; ++p) {
        Message m{0, p, "result", {}};
        wire::put_handles(m.payload, outputs_);
        out.push_back(std::move(m));
      }
      result_sent_ = true;
    }
    return out;
  }

  bool done() const override {
    if (!inner_->done()) return false;
    return me_ == 0 ? result_sent_ : !outputs_.empty();
  }

  const std::vector<Handle>& outputs() const { return outputs_; }

 private:
  // Everything here runs inside one iteration: encode with the jointly
  // sampled randomizers, evaluate the garbled offset on the teleport
  // outcomes, decode. No messages are needed until the final announcement.
  void evaluate() {
    std::vector<Handle> all(owner_.size());
    std::vector<size_t> cursor(n_, 0);
    for (size_t q = 0; q < owner_.size(); ++q) {
      const int p = owner_[q];
      const auto& src = p == 0 ? input_ : foreign_input_.at(p);
      all[q] = src.at(cursor[p]++);
    }

    const BitVec& bits = inner_->outputs();
    if (bits.size() != signal_len_ + label_len_ + 5 * static_cast<size_t>(total_slots_)) {
      throw std::runtime_error("joint outputs: size mismatch");
    }
    const BitVec sig(bits.begin(), bits.begin() + signal_len_);
    const BitVec lab(bits.begin() + signal_len_, bits.begin() + signal_len_ + label_len_);

    dqre::EncodeOptions opt;
    size_t s = signal_len_ + label_len_;
    for (const auto& g : program_.gadgets) {
      std::vector<pauli::PXElement> slots;
      for (size_t i = 0; i < g.lines.size(); ++i) {
        slots.push_back(px_from_five_bits(&bits[s]));
        s += 5;
      }
      opt.forced_randomizers.push_back(std::move(slots));
    }
    const auto enc = dqre::encode(reg_, all, program_, opt);

    dqre::DqreLabels labels;
    labels.randomizers = enc.labels.randomizers;
    labels.input_frame.resize(owner_.size());
    const auto foreign = foreign_lines(owner_);
    if (!foreign.empty()) {
      BitVec free_values;
      for (int line : foreign) {
        free_values.push_back(enc.labels.input_frame[line].first);
        free_values.push_back(enc.labels.input_frame[line].second);
      }
      const auto prog = bmr::assemble_program(offset_, params_, sig, lab);
      const auto eval = bmr::bmr_evaluate(prog, free_values);
      for (size_t i = 0; i < foreign.size(); ++i) {
        labels.input_frame[foreign[i]] = {eval.outputs[2 * i], eval.outputs[2 * i + 1]};
      }
    }
    size_t local = 0;
    for (size_t q = 0; q < owner_.size(); ++q) {
      if (owner_[q] != 0) continue;
      labels.input_frame[q] = {
          static_cast<uint8_t>(enc.labels.input_frame[q].first ^ key_.pairs[local].a),
          static_cast<uint8_t>(enc.labels.input_frame[q].second ^ key_.pairs[local].b)};
      ++local;
    }
    outputs_ = dqre::decode(reg_, program_, enc.state, labels);
  }

  Register& reg_;
  int me_;
  int n_;
  std::vector<int> owner_;
  std::vector<Handle> input_;
  std::mt19937_64 rng_;
  dqre::DqreProgram program_;
  bmr::GarbleParams params_;
  bmr::NormCircuit offset_;
  size_t signal_len_ = 0;
  size_t label_len_ = 0;
  int total_slots_ = 0;
  gmw::BoolCircuit combined_;
  qsim::QotpKey key_;
  bmr::PartyRandomness rand_;
  BitVec agg_share_;
  std::unique_ptr<gmw::GmwParty> inner_;
  std::map<int, std::vector<Handle>> foreign_input_;
  std::vector<Handle> outputs_;
  bool result_sent_ = false;
};

}  // namespace

ProtocolResult run_multi_party(Register& reg, const qsim::QuantumCircuit& f,
                               const std::vector<std::vector<Handle>>& inputs, uint64_t seed,
                               const MultiPartyOptions& options) {
  const int n = static_cast<int>(inputs.size());
  if (n < 2) throw std::invalid_argument("run_multi_party: need at least two parties");
  if (options.k < 1) throw std::invalid_argument("run_multi_party: k must be positive");
  size_t total = 0;
  for (const auto& in : inputs) total += in.size();
  if (total != static_cast<size_t>(f.num_qubits)) {
    throw std::invalid_argument("run_multi_party: inputs must cover the circuit lines");
  }
  if (total == inputs[0].size()) {
    throw std::invalid_argument("run_multi_party: party 0 may not own every line");
  }
  std::vector<int> owner;
  for (int p = 0; p < n; ++p) owner.insert(owner.end(), inputs[p].size(), p);

  std::vector<std::unique_ptr<MultiPartyMember>> members;
  std::vector<harness::Party*> ptrs;
  for (int p = 0; p < n; ++p) {
    members.push_back(std::make_unique<MultiPartyMember>(reg, f, p, n, owner, inputs[p],
                                                         options.k, mix_seed(seed, p)));
    ptrs.push_back(members.back().get());
  }
  auto run = harness::run_protocol(ptrs);

  ProtocolResult res;
  res.outputs = members[0]->outputs();
  for (const auto& m : members) res.per_party.push_back(m->outputs());
  res.rounds_used = run.rounds_used;
  res.transcript = std::move(run.transcript);
  return res;
}

}  // namespace mpqc::protocols
