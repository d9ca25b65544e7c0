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

#include "mpqc/bmr/garbling_circuits.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <utility>

#include "mpqc/gmw/builder.hpp"

namespace mpqc::bmr {

namespace {

// One PRG expansion a party computes locally and feeds in as private input:
// the seed of gate `gate`'s input at position `side` for value `val`,
// expanded under selector `sel`.
struct ExpansionKey {
  int gate;
  int side;
  int val;
  int sel;
};

std::vector<ExpansionKey> expansion_order(const NormCircuit& c) {
  std::vector<ExpansionKey> keys;
  for (size_t gi = 0; gi < c.gates.size(); ++gi) {
    const int arity = c.gates[gi].arity();
    for (int side = 0; side < arity; ++side)
      for (int val = 0; val < 2; ++val)
        for (int sel = 0; sel < (arity == 2 ? 2 : 1); ++sel)
          keys.push_back({static_cast<int>(gi), side, val, sel});
  }
  return keys;
}

std::vector<int> wire_positions(const NormCircuit& c, const std::vector<int>& wires) {
  std::vector<int> pos(c.num_wires, -1);
  for (size_t i = 0; i < wires.size(); ++i) pos[wires[i]] = static_cast<int>(i);
  return pos;
}

void check_table(const NormGate& g) {
  int ones = 0;
  const int rows = g.arity() == 1 ? 2 : 4;
  for (int i = 0; i < rows; ++i) ones += g.table[i] & 1;
  if (ones == 0 || ones == rows)
    throw std::invalid_argument("constant gate table is not garbleable");
}

// Free inputs collapse a truth-table coordinate to a public constant, which
// only stays garbleable for XOR: any other table would expose the masked
// side's value through the row pattern.
void check_free_sides(const NormCircuit& c, const NormGate& g) {
  int free_sides = 0;
  for (int w : g.in) free_sides += c.is_free(w) ? 1 : 0;
  if (free_sides == 0) return;
  const std::array<uint8_t, 4> kXor = {0, 1, 1, 0};
  if (g.arity() != 2 || free_sides != 1 || g.table != kXor)
    throw std::invalid_argument("free inputs may only feed binary XOR gates");
}

}  // namespace

int xor_and_depth(const gmw::BoolCircuit& c) {
  std::vector<int> level(c.num_wires, 0);
  for (const auto& g : c.gates) {
    int m = 0;
    for (int w : g.in) m = std::max(m, level[w]);
    level[g.out] = m + (g.op == gmw::BoolOp::NOT ? 0 : 1);
  }
  int d = 0;
  for (int w : c.outputs) d = std::max(d, level[w]);
  return d;
}

BitVec lambda_private_inputs(const NormCircuit& c, const PartyRandomness& r) {
  BitVec bits;
  for (int w : c.masked_wires()) bits.push_back(r.lambda_share[w]);
  return bits;
}

BitVec signal_private_inputs(const NormCircuit& c, int party, const PartyRandomness& r,
                             const BitVec& my_x) {
  if (my_x.size() != c.inputs[party].size())
    throw std::invalid_argument("input width mismatch");
  BitVec bits = my_x;
  for (int w : c.masked_wires()) bits.push_back(r.lambda_share[w]);
  for (int w : c.signal_seed_wires()) {
    bits.insert(bits.end(), r.seed0[w].bits.begin(), r.seed0[w].bits.end());
    bits.insert(bits.end(), r.seed1[w].bits.begin(), r.seed1[w].bits.end());
  }
  return bits;
}

BitVec label_private_inputs(const NormCircuit& c, const GarbleParams& p,
                            const PartyRandomness& r) {
  BitVec bits;
  for (int w : c.masked_wires()) bits.push_back(r.lambda_share[w]);
  for (const auto& g : c.gates) {
    bits.insert(bits.end(), r.seed0[g.out].bits.begin(), r.seed0[g.out].bits.end());
    bits.insert(bits.end(), r.seed1[g.out].bits.begin(), r.seed1[g.out].bits.end());
  }
  for (const auto& key : expansion_order(c)) {
    const int wire = c.gates[key.gate].in[key.side];
    const crypto::PrgSeed& seed = key.val ? r.seed1[wire] : r.seed0[wire];
    const BitVec expansion = crypto::prg_expand(seed, key.sel, p.n);
    bits.insert(bits.end(), expansion.begin(), expansion.end());
  }
  return bits;
}

GarblingCircuits build_garbling_circuits(const NormCircuit& c, const GarbleParams& p) {
  enforce_fanout_one(c);
  if (p.n != c.num_parties())
    throw std::invalid_argument("shared garbling needs one garbler per input owner");
  for (const auto& g : c.gates) {
    check_table(g);
    check_free_sides(c, g);
  }

  const int n = p.n;
  const int k = p.k;
  const auto masked = c.masked_wires();
  const auto in_sorted = c.input_wires_sorted();
  const auto seed_wires = c.signal_seed_wires();
  const auto pos = wire_positions(c, masked);
  if (masked.empty()) throw std::invalid_argument("circuit has no masked wires");

  GarblingCircuits out;

  {  // lambda: one XOR of shares per masked wire.
    gmw::CircuitBuilder b(n);
    std::vector<std::vector<int>> share(n);
    for (int party = 0; party < n; ++party)
      for (size_t i = 0; i < masked.size(); ++i) share[party].push_back(b.input(party));
    for (size_t i = 0; i < masked.size(); ++i) {
      std::vector<int> ins;
      for (int party = 0; party < n; ++party) ins.push_back(share[party][i]);
      b.add_output(b.gate_xor(std::move(ins)));
    }
    out.lambda_circuit = b.finish();
    out.lambda_depth = xor_and_depth(out.lambda_circuit);
  }

  {  // signal: seed bits selected by the masked value of each input wire.
    gmw::CircuitBuilder b(n);
    std::vector<int> x_wire(c.num_wires, -1);
    std::vector<std::vector<int>> share(n);
    // seed wires indexed [party][seed-wire position][value * k + bit]
    std::vector<std::vector<std::vector<int>>> seed(n);
    for (int party = 0; party < n; ++party) {
      for (int w : c.inputs[party]) x_wire[w] = b.input(party);
      for (size_t i = 0; i < masked.size(); ++i) share[party].push_back(b.input(party));
      seed[party].resize(seed_wires.size());
      for (size_t i = 0; i < seed_wires.size(); ++i)
        for (int j = 0; j < 2 * k; ++j) seed[party][i].push_back(b.input(party));
    }
    for (size_t i = 0; i < in_sorted.size(); ++i) {
      const int w = in_sorted[i];
      int rho;
      if (c.is_output(w)) {
        rho = x_wire[w];  // unmasked: the settled value is public by design
      } else {
        std::vector<int> ins = {x_wire[w]};
        for (int party = 0; party < n; ++party) ins.push_back(share[party][pos[w]]);
        rho = b.gate_xor(std::move(ins));
      }
      for (int party = 0; party < n; ++party) {
        for (int j = 0; j < k; ++j) {
          const int s0 = seed[party][i][j];
          const int s1 = seed[party][i][k + j];
          const int sel = b.gate_and(rho, b.gate_xor2(s0, s1));
          b.add_output(b.gate_xor2(s0, sel));
        }
      }
      b.add_output(rho);
    }
    // Free inputs: both rows, seeds routed straight through. The trailing
    // selector bits are the public values 0 and 1; the caller appends them.
    for (size_t i = in_sorted.size(); i < seed_wires.size(); ++i) {
      for (int v = 0; v < 2; ++v)
        for (int party = 0; party < n; ++party)
          for (int j = 0; j < k; ++j) b.add_output(seed[party][i][v * k + j]);
    }
    out.signal_circuit = b.finish();
    out.signal_depth = xor_and_depth(out.signal_circuit);
  }

  {  // label: one padded output encoding per truth-table row.
    gmw::CircuitBuilder b(n);
    std::vector<std::vector<int>> share(n);
    // gamma seed wires indexed [party][gate][value * k + bit]
    std::vector<std::vector<std::vector<int>>> gseed(n);
    // expansion wires indexed [party][expansion key][bit]
    std::vector<std::vector<std::vector<int>>> exp(n);
    const auto keys = expansion_order(c);
    for (int party = 0; party < n; ++party) {
      for (size_t i = 0; i < masked.size(); ++i) share[party].push_back(b.input(party));
      gseed[party].resize(c.gates.size());
      for (size_t gi = 0; gi < c.gates.size(); ++gi)
        for (int j = 0; j < 2 * k; ++j) gseed[party][gi].push_back(b.input(party));
      exp[party].resize(keys.size());
      for (size_t ki = 0; ki < keys.size(); ++ki)
        for (int j = 0; j < n * k + 1; ++j) exp[party][ki].push_back(b.input(party));
    }
    // Masks once, shared by every gate that reads the wire.
    std::vector<int> lam(c.num_wires, -1);
    for (size_t i = 0; i < masked.size(); ++i) {
      std::vector<int> ins;
      for (int party = 0; party < n; ++party) ins.push_back(share[party][i]);
      lam[masked[i]] = b.gate_xor(std::move(ins));
    }
    // expansion key lookup by (gate, side, val, sel)
    std::vector<std::vector<int>> key_at(c.gates.size(), std::vector<int>(8, -1));
    for (size_t ki = 0; ki < keys.size(); ++ki) {
      const auto& key = keys[ki];
      key_at[key.gate][key.side * 4 + key.val * 2 + key.sel] = static_cast<int>(ki);
    }

    for (size_t gi = 0; gi < c.gates.size(); ++gi) {
      const NormGate& g = c.gates[gi];
      const int gamma = g.out;
      // [λ_w == t] literals for each input wire.
      auto lits = [&](int w) -> std::array<int, 2> {
        return {b.gate_not(lam[w]), lam[w]};
      };
      // Shared value-selection wires d_j = s0_j ^ s1_j of the output wire.
      std::vector<std::vector<int>> d(n, std::vector<int>(k));
      for (int party = 0; party < n; ++party)
        for (int j = 0; j < k; ++j)
          d[party][j] = b.gate_xor2(gseed[party][gi][j], gseed[party][gi][k + j]);

      const int rows = g.arity() == 1 ? 2 : 4;
      const bool a_free = c.is_free(g.in[0]);
      const bool b_free = g.arity() == 2 && c.is_free(g.in[1]);
      std::array<int, 4> minterm{-1, -1, -1, -1};
      std::array<int, 2> la{-1, -1}, lb{-1, -1}, lm{-1, -1};
      if (a_free || b_free) {
        lm = lits(g.in[a_free ? 1 : 0]);
      } else if (g.arity() == 2) {
        la = lits(g.in[0]);
        lb = lits(g.in[1]);
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) minterm[i * 2 + j] = b.gate_and(la[i], lb[j]);
      } else {
        la = lits(g.in[0]);
      }

      for (int row = 0; row < rows; ++row) {
        const int a = rows == 2 ? row : row / 2;
        const int bb = rows == 2 ? 0 : row % 2;
        // Masked output value for this row.
        int v = -1;
        if (a_free || b_free) {
          // The free coordinate is public, so the XOR collapses to a literal
          // of the masked side; AND-free, which is what keeps this circuit's
          // depth independent of free-input count.
          const int fv = a_free ? a : bb;
          const int mv = a_free ? bb : a;
          std::vector<int> v_terms = {lm[1 ^ mv]};
          if (!c.is_output(gamma))
            for (int party = 0; party < n; ++party) v_terms.push_back(share[party][pos[gamma]]);
          v = b.gate_xor(std::move(v_terms));
          if (fv) v = b.gate_not(v);
        } else {
          std::vector<int> v_terms;
          if (g.arity() == 2) {
            for (int ta = 0; ta < 2; ++ta)
              for (int tb = 0; tb < 2; ++tb)
                if (g.table[ta * 2 + tb]) v_terms.push_back(minterm[(ta ^ a) * 2 + (tb ^ bb)]);
          } else {
            for (int t = 0; t < 2; ++t)
              if (g.table[t]) v_terms.push_back(la[t ^ a]);
          }
          if (!c.is_output(gamma))
            for (int party = 0; party < n; ++party) v_terms.push_back(share[party][pos[gamma]]);
          v = b.gate_xor(std::move(v_terms));
        }

        const int key_alpha = key_at[gi][0 * 4 + a * 2 + (g.arity() == 2 ? bb : 0)];
        const int key_beta = g.arity() == 2 ? key_at[gi][1 * 4 + bb * 2 + a] : -1;

        for (int j = 0; j < n * k + 1; ++j) {
          std::vector<int> terms;
          for (int party = 0; party < n; ++party) {
            terms.push_back(exp[party][key_alpha][j]);
            if (key_beta >= 0) terms.push_back(exp[party][key_beta][j]);
          }
          if (j < n * k) {
            const int party = j / k;
            const int bit = j % k;
            terms.push_back(gseed[party][gi][bit]);  // s0 bit
            terms.push_back(b.gate_and(v, d[party][bit]));
          } else {
            terms.push_back(v);
          }
          b.add_output(b.gate_xor(std::move(terms)));
        }
      }
    }
    out.label_circuit = b.finish();
    out.label_depth = xor_and_depth(out.label_circuit);
  }

  return out;
}

GarbledProgram assemble_program(const NormCircuit& c, const GarbleParams& p,
                                const BitVec& signal_bits, const BitVec& label_bits) {
  GarbledProgram prog;
  prog.params = p;
  prog.circuit = c;

  const size_t row = static_cast<size_t>(p.n) * p.k + 1;
  size_t pos = 0;
  for (int w : c.input_wires_sorted()) {
    if (pos + row > signal_bits.size()) throw std::invalid_argument("signal bits truncated");
    WireSignal sig;
    sig.bits.assign(signal_bits.begin() + pos, signal_bits.begin() + pos + row);
    prog.input_signals.emplace_back(w, std::move(sig));
    pos += row;
  }
  std::vector<int> free_sorted = c.free_inputs;
  std::sort(free_sorted.begin(), free_sorted.end());
  for (int w : free_sorted) {
    std::array<WireSignal, 2> rows;
    for (int v = 0; v < 2; ++v) {
      if (pos + row - 1 > signal_bits.size()) throw std::invalid_argument("signal bits truncated");
      rows[v].bits.assign(signal_bits.begin() + pos, signal_bits.begin() + pos + row - 1);
      rows[v].bits.push_back(static_cast<uint8_t>(v));
      pos += row - 1;
    }
    prog.free_signals.emplace_back(w, std::move(rows));
  }
  if (pos != signal_bits.size()) throw std::invalid_argument("signal bits trailing data");

  pos = 0;
  for (const auto& g : c.gates) {
    GateLabelSet set;
    const int rows = g.arity() == 2 ? 4 : 2;
    for (int r = 0; r < rows; ++r) {
      if (pos + row > label_bits.size()) throw std::invalid_argument("label bits truncated");
      set.labels.emplace_back(label_bits.begin() + pos, label_bits.begin() + pos + row);
      pos += row;
    }
    prog.gate_labels.push_back(std::move(set));
  }
  if (pos != label_bits.size()) throw std::invalid_argument("label bits trailing data");
  return prog;
}

}  // namespace mpqc::bmr
