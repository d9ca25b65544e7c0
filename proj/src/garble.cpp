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

#include "mpqc/bmr/garble.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace mpqc::bmr {

std::vector<int> NormCircuit::input_wires_sorted() const {
  std::vector<int> ws;
  for (const auto& party : inputs) ws.insert(ws.end(), party.begin(), party.end());
  std::sort(ws.begin(), ws.end());
  return ws;
}

std::vector<int> NormCircuit::masked_wires() const {
  std::set<int> skip(outputs.begin(), outputs.end());
  skip.insert(free_inputs.begin(), free_inputs.end());
  std::vector<int> ws;
  for (int w = 0; w < num_wires; ++w)
    if (!skip.count(w)) ws.push_back(w);
  return ws;
}

std::vector<int> NormCircuit::signal_seed_wires() const {
  std::vector<int> ws = input_wires_sorted();
  std::vector<int> free = free_inputs;
  std::sort(free.begin(), free.end());
  ws.insert(ws.end(), free.begin(), free.end());
  return ws;
}

bool NormCircuit::is_output(int w) const {
  return std::find(outputs.begin(), outputs.end(), w) != outputs.end();
}

bool NormCircuit::is_free(int w) const {
  return std::find(free_inputs.begin(), free_inputs.end(), w) != free_inputs.end();
}

namespace {

constexpr std::array<uint8_t, 4> kTableXor = {0, 1, 1, 0};
constexpr std::array<uint8_t, 4> kTableAnd = {0, 0, 0, 1};
constexpr std::array<uint8_t, 4> kTableNot = {1, 0, 0, 0};  // unary, [v] entries
constexpr std::array<uint8_t, 4> kTableCopy = {0, 1, 0, 0};

}  // namespace

NormCircuit normalize(const gmw::BoolCircuit& c) {
  c.validate();
  NormCircuit out;
  out.num_wires = c.num_wires;
  out.inputs = c.inputs;
  out.outputs = c.outputs;
  for (const auto& g : c.gates) {
    switch (g.op) {
      case gmw::BoolOp::NOT:
        out.gates.push_back({g.out, {g.in[0]}, kTableNot});
        break;
      case gmw::BoolOp::AND:
        out.gates.push_back({g.out, {g.in[0], g.in[1]}, kTableAnd});
        break;
      case gmw::BoolOp::XOR: {
        if (g.in.size() == 1) {
          out.gates.push_back({g.out, {g.in[0]}, kTableCopy});
          break;
        }
        // Left-leaning binary tree; intermediate results get fresh wires and
        // only the last node writes the original output wire.
        int acc = g.in[0];
        for (size_t i = 1; i < g.in.size(); ++i) {
          int dst = (i + 1 == g.in.size()) ? g.out : out.num_wires++;
          out.gates.push_back({dst, {acc, g.in[i]}, kTableXor});
          acc = dst;
        }
        break;
      }
    }
  }
  return out;
}

void enforce_fanout_one(const NormCircuit& c) {
  std::vector<int> consumers(c.num_wires, 0);
  for (const auto& g : c.gates)
    for (int w : g.in) ++consumers[w];
  for (int w = 0; w < c.num_wires; ++w) {
    if (consumers[w] > 1)
      throw FanOutViolation("wire " + std::to_string(w) + " feeds " +
                            std::to_string(consumers[w]) + " gates");
  }
  for (int w : c.outputs) {
    if (consumers[w] > 0)
      throw FanOutViolation("output wire " + std::to_string(w) +
                            " also feeds a gate; outputs are unmasked and must "
                            "stay terminal");
  }
  for (int w : c.free_inputs) {
    if (w < 0 || w >= c.num_wires) throw FanOutViolation("free input out of range");
    if (c.is_output(w)) throw FanOutViolation("free input cannot be an output");
    for (const auto& gg : c.gates) {
      if (gg.out == w) throw FanOutViolation("free input cannot be a gate output");
    }
    for (const auto& party : c.inputs) {
      if (std::find(party.begin(), party.end(), w) != party.end())
        throw FanOutViolation("free input cannot be party-owned");
    }
  }
}

PartyRandomness PartyRandomness::sample(const NormCircuit& c, int k,
                                        std::mt19937_64& rng) {
  PartyRandomness r;
  r.seed0.reserve(c.num_wires);
  r.seed1.reserve(c.num_wires);
  for (int w = 0; w < c.num_wires; ++w) {
    r.seed0.push_back(crypto::PrgSeed::random(k, rng));
    r.seed1.push_back(crypto::PrgSeed::random(k, rng));
  }
  r.lambda_share.resize(c.num_wires, 0);
  for (int w = 0; w < c.num_wires; ++w)
    if (!c.is_output(w) && !c.is_free(w)) r.lambda_share[w] = static_cast<uint8_t>(rng() & 1);
  return r;
}

size_t PartyRandomness::bit_count(const NormCircuit& c) const {
  size_t bits = 0;
  for (const auto& s : seed0) bits += s.bits.size();
  for (const auto& s : seed1) bits += s.bits.size();
  bits += c.masked_wires().size();
  return bits;
}

crypto::PrgSeed WireSignal::seed_of(int party, int k) const {
  crypto::PrgSeed s;
  s.bits.assign(bits.begin() + static_cast<long>(party) * k,
                bits.begin() + static_cast<long>(party + 1) * k);
  return s;
}

WireSignal build_signal(const std::vector<crypto::PrgSeed>& seeds_for_value,
                        uint8_t masked_bit) {
  WireSignal sig;
  for (const auto& s : seeds_for_value)
    sig.bits.insert(sig.bits.end(), s.bits.begin(), s.bits.end());
  sig.bits.push_back(masked_bit & 1);
  return sig;
}

BitVec compute_lambda(const NormCircuit& c, const std::vector<PartyRandomness>& rand) {
  BitVec lambdas(c.num_wires, 0);
  for (const auto& r : rand) xor_into(lambdas, r.lambda_share);
  for (int w : c.outputs) {
    if (lambdas[w] != 0) throw std::logic_error("output wire carries a mask");
  }
  for (int w : c.free_inputs) {
    if (lambdas[w] != 0) throw std::logic_error("free input carries a mask");
  }
  return lambdas;
}

namespace {

// Signal encoding of wire w for masked value v, from the dealer's vantage.
WireSignal encode_wire(const NormCircuit& c, int w, uint8_t v,
                       const std::vector<PartyRandomness>& rand) {
  std::vector<crypto::PrgSeed> seeds;
  seeds.reserve(rand.size());
  for (const auto& r : rand) seeds.push_back(v ? r.seed1[w] : r.seed0[w]);
  return build_signal(seeds, v);
}

}  // namespace

BitVec compute_gate_label(const NormCircuit& c, const GarbleParams& p, int gate_idx,
                          int a, int b, const std::vector<PartyRandomness>& rand,
                          const BitVec& lambdas) {
  const NormGate& g = c.gates[gate_idx];
  const int alpha = g.in[0];
  uint8_t v;
  if (g.arity() == 1) {
    v = static_cast<uint8_t>(g.table[(a ^ lambdas[alpha]) & 1] ^ lambdas[g.out]);
  } else {
    const int beta = g.in[1];
    const int ta = (a ^ lambdas[alpha]) & 1;
    const int tb = (b ^ lambdas[beta]) & 1;
    v = static_cast<uint8_t>(g.table[ta * 2 + tb] ^ lambdas[g.out]);
  }
  BitVec label = encode_wire(c, g.out, v, rand).bits;
  // Pad with expansions keyed by the opposite row coordinate. Fan-out one
  // means each seed is expanded by exactly one gate, so the selector needs
  // no further separation.
  for (const auto& r : rand) {
    const crypto::PrgSeed& sa = a ? r.seed1[alpha] : r.seed0[alpha];
    xor_into(label, crypto::prg_expand(sa, g.arity() == 2 ? b : 0, p.n));
  }
  if (g.arity() == 2) {
    const int beta = g.in[1];
    for (const auto& r : rand) {
      const crypto::PrgSeed& sb = b ? r.seed1[beta] : r.seed0[beta];
      xor_into(label, crypto::prg_expand(sb, a, p.n));
    }
  }
  return label;
}

GarbledProgram garble_dealer(const NormCircuit& c, const GarbleParams& p,
                             const std::vector<PartyRandomness>& rand,
                             const std::vector<BitVec>& inputs) {
  enforce_fanout_one(c);
  if (static_cast<int>(rand.size()) != p.n)
    throw std::invalid_argument("randomness for wrong party count");
  if (static_cast<int>(inputs.size()) != c.num_parties())
    throw std::invalid_argument("inputs for wrong party count");

  const BitVec lambdas = compute_lambda(c, rand);

  GarbledProgram prog;
  prog.params = p;
  prog.circuit = c;
  for (size_t gi = 0; gi < c.gates.size(); ++gi) {
    GateLabelSet set;
    const int rows = c.gates[gi].arity() == 1 ? 2 : 4;
    for (int row = 0; row < rows; ++row) {
      const int a = rows == 2 ? row : row / 2;
      const int b = rows == 2 ? 0 : row % 2;
      set.labels.push_back(
          compute_gate_label(c, p, static_cast<int>(gi), a, b, rand, lambdas));
    }
    prog.gate_labels.push_back(std::move(set));
  }

  std::vector<std::pair<int, uint8_t>> assignments;
  for (int party = 0; party < c.num_parties(); ++party) {
    if (inputs[party].size() != c.inputs[party].size())
      throw std::invalid_argument("input width mismatch");
    for (size_t i = 0; i < c.inputs[party].size(); ++i)
      assignments.emplace_back(c.inputs[party][i], inputs[party][i]);
  }
  std::sort(assignments.begin(), assignments.end());
  for (auto [w, x] : assignments) {
    const uint8_t rho = static_cast<uint8_t>((x ^ lambdas[w]) & 1);
    prog.input_signals.emplace_back(w, encode_wire(c, w, rho, rand));
  }
  std::vector<int> free = c.free_inputs;
  std::sort(free.begin(), free.end());
  for (int w : free) {
    prog.free_signals.emplace_back(
        w, std::array<WireSignal, 2>{encode_wire(c, w, 0, rand), encode_wire(c, w, 1, rand)});
  }
  return prog;
}

EvalResult bmr_evaluate(const GarbledProgram& program, const BitVec& free_values) {
  const NormCircuit& c = program.circuit;
  const int n = program.params.n;
  const int sig_len = n * program.params.k + 1;

  EvalResult res;
  res.signals.resize(c.num_wires);
  std::vector<uint8_t> known(c.num_wires, 0);
  for (const auto& [w, sig] : program.input_signals) {
    if (static_cast<int>(sig.bits.size()) != sig_len)
      throw std::invalid_argument("input signal has wrong length");
    res.signals[w] = sig;
    known[w] = 1;
  }
  if (free_values.size() != program.free_signals.size())
    throw std::invalid_argument("one free value per free input");
  for (size_t i = 0; i < program.free_signals.size(); ++i) {
    const auto& [w, rows] = program.free_signals[i];
    res.signals[w] = rows[free_values[i] & 1];
    known[w] = 1;
  }

  for (size_t gi = 0; gi < c.gates.size(); ++gi) {
    const NormGate& g = c.gates[gi];
    for (int w : g.in)
      if (!known[w]) throw std::logic_error("gate input signal missing");
    const WireSignal& sa = res.signals[g.in[0]];
    const int a = sa.selector();

    BitVec plain;
    if (g.arity() == 1) {
      plain = program.gate_labels[gi].labels[a];
      for (int i = 0; i < n; ++i)
        xor_into(plain, crypto::prg_expand(sa.seed_of(i, program.params.k), 0, n));
    } else {
      const WireSignal& sb = res.signals[g.in[1]];
      const int b = sb.selector();
      plain = program.gate_labels[gi].labels[a * 2 + b];
      for (int i = 0; i < n; ++i)
        xor_into(plain, crypto::prg_expand(sa.seed_of(i, program.params.k), b, n));
      for (int i = 0; i < n; ++i)
        xor_into(plain, crypto::prg_expand(sb.seed_of(i, program.params.k), a, n));
    }
    if (static_cast<int>(plain.size()) != sig_len)
      throw std::logic_error("decoded signal has wrong length");
    res.signals[g.out].bits = std::move(plain);
    known[g.out] = 1;
  }

  for (int w : c.outputs) {
    if (!known[w]) throw std::logic_error("output wire never settled");
    res.outputs.push_back(res.signals[w].selector());
  }
  return res;
}

// ---------------------------------------------------------------------------
// Serialization. Little-endian u32 framing, bit vectors packed LSB-first.

namespace {

void put_bits(std::vector<uint8_t>& out, const BitVec& bits) {
  put_u32(out, static_cast<uint32_t>(bits.size()));
  put_bytes(out, pack_bits_le(bits));
}

BitVec get_bits(const std::vector<uint8_t>& in, size_t& pos) {
  const uint32_t n = get_u32(in, pos);
  return unpack_bits_le(get_bytes(in, pos), n);
}

}  // namespace

std::vector<uint8_t> GarbledProgram::serialize() const {
  std::vector<uint8_t> out;
  put_u32(out, 0x47505247u);  // "GRPG"
  put_u32(out, static_cast<uint32_t>(params.n));
  put_u32(out, static_cast<uint32_t>(params.k));
  put_u32(out, static_cast<uint32_t>(circuit.num_wires));
  put_u32(out, static_cast<uint32_t>(circuit.outputs.size()));

  put_u32(out, static_cast<uint32_t>(circuit.inputs.size()));
  for (const auto& party : circuit.inputs) {
    put_u32(out, static_cast<uint32_t>(party.size()));
    for (int w : party) put_u32(out, static_cast<uint32_t>(w));
  }
  for (int w : circuit.outputs) put_u32(out, static_cast<uint32_t>(w));

  put_u32(out, static_cast<uint32_t>(circuit.gates.size()));
  for (size_t gi = 0; gi < circuit.gates.size(); ++gi) {
    const NormGate& g = circuit.gates[gi];
    put_u32(out, static_cast<uint32_t>(g.out));
    put_u32(out, static_cast<uint32_t>(g.arity()));
    for (int w : g.in) put_u32(out, static_cast<uint32_t>(w));
    uint8_t table = 0;
    for (int i = 0; i < 4; ++i) table |= static_cast<uint8_t>((g.table[i] & 1) << i);
    out.push_back(table);
    for (const auto& label : gate_labels[gi].labels) put_bits(out, label);
  }

  put_u32(out, static_cast<uint32_t>(input_signals.size()));
  for (const auto& [w, sig] : input_signals) {
    put_u32(out, static_cast<uint32_t>(w));
    put_bits(out, sig.bits);
  }
  put_u32(out, static_cast<uint32_t>(free_signals.size()));
  for (const auto& [w, rows] : free_signals) {
    put_u32(out, static_cast<uint32_t>(w));
    put_bits(out, rows[0].bits);
    put_bits(out, rows[1].bits);
  }
  return out;
}

GarbledProgram GarbledProgram::deserialize(const std::vector<uint8_t>& blob) {
  size_t pos = 0;
  if (get_u32(blob, pos) != 0x47505247u)
    throw std::invalid_argument("not a garbled program blob");
  GarbledProgram prog;
  prog.params.n = static_cast<int>(get_u32(blob, pos));
  prog.params.k = static_cast<int>(get_u32(blob, pos));
  prog.circuit.num_wires = static_cast<int>(get_u32(blob, pos));
  const uint32_t num_outputs = get_u32(blob, pos);

  const uint32_t num_parties = get_u32(blob, pos);
  prog.circuit.inputs.resize(num_parties);
  for (auto& party : prog.circuit.inputs) {
    party.resize(get_u32(blob, pos));
    for (int& w : party) w = static_cast<int>(get_u32(blob, pos));
  }
  prog.circuit.outputs.resize(num_outputs);
  for (int& w : prog.circuit.outputs) w = static_cast<int>(get_u32(blob, pos));

  const uint32_t num_gates = get_u32(blob, pos);
  for (uint32_t gi = 0; gi < num_gates; ++gi) {
    NormGate g;
    g.out = static_cast<int>(get_u32(blob, pos));
    const uint32_t arity = get_u32(blob, pos);
    if (arity != 1 && arity != 2) throw std::invalid_argument("bad gate arity");
    g.in.resize(arity);
    for (int& w : g.in) w = static_cast<int>(get_u32(blob, pos));
    if (pos >= blob.size()) throw std::invalid_argument("truncated blob");
    const uint8_t table = blob[pos++];
    for (int i = 0; i < 4; ++i) g.table[i] = (table >> i) & 1;
    GateLabelSet set;
    const int rows = arity == 1 ? 2 : 4;
    for (int row = 0; row < rows; ++row) set.labels.push_back(get_bits(blob, pos));
    prog.circuit.gates.push_back(std::move(g));
    prog.gate_labels.push_back(std::move(set));
  }

  const uint32_t num_signals = get_u32(blob, pos);
  for (uint32_t i = 0; i < num_signals; ++i) {
    const int w = static_cast<int>(get_u32(blob, pos));
    WireSignal sig;
    sig.bits = get_bits(blob, pos);
    prog.input_signals.emplace_back(w, std::move(sig));
  }
  const uint32_t num_free = get_u32(blob, pos);
  for (uint32_t i = 0; i < num_free; ++i) {
    const int w = static_cast<int>(get_u32(blob, pos));
    std::array<WireSignal, 2> rows;
    rows[0].bits = get_bits(blob, pos);
    rows[1].bits = get_bits(blob, pos);
    prog.circuit.free_inputs.push_back(w);
    prog.free_signals.emplace_back(w, std::move(rows));
  }
  if (pos != blob.size()) throw std::invalid_argument("trailing bytes in blob");
  return prog;
}

}  // namespace mpqc::bmr
