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

#include "mpqc/gmw/engine.hpp"

#include <map>
#include <memory>
#include <stdexcept>

#include "mpqc/crypto/ot.hpp"

namespace mpqc::gmw {

BitVec share_bit(uint8_t bit, int n, std::mt19937_64& rng) {
  if (n < 2) throw std::invalid_argument("need at least two parties");
  BitVec shares = random_bits(static_cast<size_t>(n) - 1, rng);
  uint8_t acc = bit & 1;
  for (uint8_t s : shares) acc ^= s;
  shares.push_back(acc);
  return shares;
}

std::array<uint8_t, 4> and2_table(uint8_t x0, uint8_t y0, uint8_t r) {
  std::array<uint8_t, 4> t;
  for (int b1 = 0; b1 < 2; ++b1)
    for (int b2 = 0; b2 < 2; ++b2)
      t[b1 * 2 + b2] = static_cast<uint8_t>((r ^ ((x0 ^ b1) & (y0 ^ b2))) & 1);
  return t;
}

std::array<uint8_t, 4> cross_table(uint8_t xi, uint8_t yi, uint8_t r) {
  std::array<uint8_t, 4> t;
  for (int b1 = 0; b1 < 2; ++b1)
    for (int b2 = 0; b2 < 2; ++b2)
      t[b1 * 2 + b2] = static_cast<uint8_t>((r ^ (xi & b2) ^ (yi & b1)) & 1);
  return t;
}

using harness::Message;

GmwParty::GmwParty(const BoolCircuit& c, int me, BitVec my_inputs, uint64_t seed,
                   const GmwOptions& opt)
    : c_(c),
      me_(me),
      n_(c.num_parties()),
      my_inputs_(std::move(my_inputs)),
      rng_(seed),
      opt_(opt),
      share_(c.num_wires, 0),
      have_(c.num_wires, false),
      layers_(c.and_layers()) {
  for (size_t p = 0; p < c_.inputs.size(); ++p) {
    if (static_cast<int>(p) != me_) expected_share_items_ += c_.inputs[p].size();
  }
}

std::vector<Message> GmwParty::step(int iteration, const std::vector<Message>& inbox) {
  std::vector<Message> out;
  if (iteration == 0) {
    send_input_shares(out);
    if (expected_share_items_ == 0) advance(out);
    maybe_reveal(out);
    return out;
  }

  // Shares and requests may share an iteration; absorb shares first.
  for (const auto& m : inbox) {
    if (m.tag == "share") absorb_shares(m);
  }
  for (const auto& m : inbox) {
    if (m.tag == "ot-req") respond(m, out);
    else if (m.tag == "ot-resp") finish(m);
    else if (m.tag == "reveal") absorb_reveal(m);
    else if (m.tag != "share") throw std::runtime_error("unexpected tag: " + m.tag);
  }

  if (received_share_items_ == expected_share_items_ && !advanced_) advance(out);
  maybe_reveal(out);
  return out;
}

bool GmwParty::done() const { return revealed_ && reveals_seen_ == expected_reveals(); }

void GmwParty::send_input_shares(std::vector<Message>& out) {
  std::vector<std::vector<uint8_t>> payloads(n_);
  for (size_t i = 0; i < c_.inputs[me_].size(); ++i) {
    int wire = c_.inputs[me_][i];
    BitVec shares = share_bit(my_inputs_.at(i), n_, rng_);
    share_[wire] = shares[me_];
    have_[wire] = true;
    for (int p = 0; p < n_; ++p) {
      if (p == me_) continue;
      put_u32(payloads[p], static_cast<uint32_t>(wire));
      payloads[p].push_back(shares[p]);
    }
  }
  if (c_.inputs[me_].empty()) return;
  for (int p = 0; p < n_; ++p) {
    if (p != me_) out.push_back({me_, p, "share", std::move(payloads[p])});
  }
}

void GmwParty::absorb_shares(const Message& m) {
  size_t pos = 0;
  while (pos < m.payload.size()) {
    uint32_t wire = get_u32(m.payload, pos);
    if (pos >= m.payload.size()) throw std::runtime_error("truncated share item");
    share_[wire] = m.payload[pos++] & 1;
    have_[wire] = true;
    ++received_share_items_;
  }
}

void GmwParty::propagate() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& g : c_.gates) {
      if (g.op == BoolOp::AND || have_[g.out]) continue;
      bool ready = true;
      for (int w : g.in) ready &= have_[w];
      if (!ready) continue;
      if (g.op == BoolOp::NOT) {
        share_[g.out] = share_[g.in[0]] ^ (me_ == 0 ? 1 : 0);
      } else {
        uint8_t v = 0;
        for (int w : g.in) v ^= share_[w];
        share_[g.out] = v;
      }
      have_[g.out] = true;
      changed = true;
    }
  }
}

// Enters the current AND layer: seeds each gate's accumulator with the
// local diagonal term and fires OT requests towards every lower-indexed
// sender. With no layers left this just flushes the free gates.
void GmwParty::advance(std::vector<Message>& out) {
  propagate();
  advanced_ = true;
  if (current_layer_ >= static_cast<int>(layers_.size())) return;

  std::vector<std::vector<uint8_t>> payloads(n_);
  for (int gate_idx : layers_[current_layer_]) {
    const auto& g = c_.gates[gate_idx];
    uint8_t xs = share_[g.in[0]], ys = share_[g.in[1]];
    and_acc_[gate_idx] = n_ == 2 ? 0 : static_cast<uint8_t>(xs & ys);
    for (int sender = 0; sender < me_; ++sender) {
      crypto::OtReceiver recv;
      auto request = ot_begin(recv, 4, xs * 2 + ys, rng_);
      ot_state_[{gate_idx, sender}] = recv;
      put_u32(payloads[sender], static_cast<uint32_t>(gate_idx));
      put_bytes(payloads[sender], request);
    }
  }
  for (int p = 0; p < me_; ++p) {
    if (!payloads[p].empty()) out.push_back({me_, p, "ot-req", std::move(payloads[p])});
  }
}

void GmwParty::respond(const Message& m, std::vector<Message>& out) {
  std::vector<uint8_t> payload;
  size_t pos = 0;
  while (pos < m.payload.size()) {
    uint32_t gate_idx = get_u32(m.payload, pos);
    auto request = get_bytes(m.payload, pos);
    const auto& g = c_.gates.at(gate_idx);
    if (!have_[g.in[0]] || !have_[g.in[1]]) {
      throw std::runtime_error("OT request for a gate whose inputs are not shared yet");
    }
    uint8_t xs = share_[g.in[0]], ys = share_[g.in[1]];
    uint8_t r = static_cast<uint8_t>(rng_() & 1);
    auto table = n_ == 2 ? and2_table(xs, ys, r) : cross_table(xs, ys, r);
    std::vector<std::vector<uint8_t>> msgs;
    for (uint8_t entry : table) msgs.push_back({entry});
    put_u32(payload, gate_idx);
    put_bytes(payload, crypto::ot_send(request, msgs, rng_));

    and_acc_.try_emplace(static_cast<int>(gate_idx),
                         n_ == 2 ? 0 : static_cast<uint8_t>(xs & ys));
    and_acc_[gate_idx] ^= r;
    sender_done_[gate_idx]++;
    maybe_commit(gate_idx);
  }
  out.push_back({me_, m.from, "ot-resp", std::move(payload)});
}

void GmwParty::finish(const Message& m) {
  size_t pos = 0;
  while (pos < m.payload.size()) {
    uint32_t gate_idx = get_u32(m.payload, pos);
    auto response = get_bytes(m.payload, pos);
    auto it = ot_state_.find({static_cast<int>(gate_idx), m.from});
    if (it == ot_state_.end()) throw std::runtime_error("unsolicited OT response");
    auto opened = ot_finish(it->second, response);
    ot_state_.erase(it);
    and_acc_[gate_idx] ^= opened.at(0) & 1;
    receiver_done_[gate_idx]++;
    maybe_commit(gate_idx);
  }
}

// Commits a gate share once all of this party's OT roles for it resolved:
// me_ openings as receiver, n-1-me_ responses as sender.
void GmwParty::maybe_commit(int gate_idx) {
  if (receiver_done_[gate_idx] != me_ || sender_done_[gate_idx] != n_ - 1 - me_) return;
  share_[c_.gates[gate_idx].out] = and_acc_[gate_idx] & 1;
  have_[c_.gates[gate_idx].out] = true;
  if (++committed_ == static_cast<int>(layers_[current_layer_].size())) {
    committed_ = 0;
    ++current_layer_;
    advanced_ = false;
  }
}

void GmwParty::maybe_reveal(std::vector<Message>& out) {
  if (revealed_) return;
  for (int w : c_.outputs) {
    if (!have_[w]) return;
  }
  revealed_ = true;
  if (outputs_acc_.empty()) outputs_acc_.assign(c_.outputs.size(), 0);
  std::vector<uint8_t> payload;
  for (size_t i = 0; i < c_.outputs.size(); ++i) {
    uint8_t s = share_[c_.outputs[i]];
    outputs_acc_[i] ^= s;
    payload.push_back(s);
  }
  for (int p = 0; p < n_; ++p) {
    if (p == me_) continue;
    if (opt_.reveal_to >= 0 && p != opt_.reveal_to) continue;
    out.push_back({me_, p, "reveal", payload});
  }
  if (reveals_seen_ == expected_reveals()) outputs_ = outputs_acc_;
}

int GmwParty::expected_reveals() const {
  return (opt_.reveal_to >= 0 && opt_.reveal_to != me_) ? 0 : n_ - 1;
}

void GmwParty::absorb_reveal(const Message& m) {
  if (expected_reveals() == 0) throw std::runtime_error("reveal sent to non-target");
  if (m.payload.size() != c_.outputs.size()) throw std::runtime_error("bad reveal size");
  if (outputs_acc_.empty()) outputs_acc_.assign(c_.outputs.size(), 0);
  for (size_t i = 0; i < m.payload.size(); ++i) outputs_acc_[i] ^= m.payload[i] & 1;
  ++reveals_seen_;
  if (revealed_ && reveals_seen_ == expected_reveals()) outputs_ = outputs_acc_;
}

GmwResult run_gmw(const BoolCircuit& circuit, const std::vector<BitVec>& inputs,
                  uint64_t seed, const GmwOptions& options) {
  circuit.validate();
  int n = circuit.num_parties();
  if (n < 2) throw std::invalid_argument("need at least two parties");
  if (static_cast<int>(inputs.size()) != n) throw std::invalid_argument("inputs per party");
  if (options.reveal_to >= n) throw std::invalid_argument("reveal target out of range");

  std::vector<std::unique_ptr<GmwParty>> parties;
  std::vector<harness::Party*> raw;
  for (int p = 0; p < n; ++p) {
    parties.push_back(std::make_unique<GmwParty>(circuit, p, inputs[p],
                                                 mix_seed(seed, p), options));
    raw.push_back(parties.back().get());
  }
  auto run = harness::run_protocol(raw);

  GmwResult result;
  result.transcript = std::move(run.transcript);
  result.rounds_used = result.transcript.counted_rounds("reveal");
  int target = options.reveal_to >= 0 ? options.reveal_to : 0;
  result.outputs = parties[target]->outputs();
  for (auto& p : parties) {
    BitVec os;
    for (int w : circuit.outputs) os.push_back(p->final_share()[w]);
    result.output_shares.push_back(std::move(os));
  }
  return result;
}

}  // namespace mpqc::gmw
