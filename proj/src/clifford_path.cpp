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

#include "mpqc/protocols/clifford_path.hpp"

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

struct MaskWires {
  int a;
  int b;
};

// XOR-only circuit that pushes the joint pad through the public gates.
// Inputs per party: (a, b) per owned line, lines ascending, then this
// party's flip share (a, b) per cut per line, cut-major. Outputs: the joint
// flip per cut per line, cut-major, then the final correction per line -
// 2 * lines * (cuts + 1) bits in all. Each cut both emits the joint flip
// and XORs it into the running masks, so the final corrections describe the
// state party 0 actually holds after flipping.
gmw::BoolCircuit build_push_circuit(const qsim::QuantumCircuit& f, const std::vector<int>& cuts,
                                    const std::vector<int>& owner, int n) {
  const int nq = f.num_qubits;
  gmw::CircuitBuilder b(n);

  std::vector<MaskWires> cur(nq);
  for (int q = 0; q < nq; ++q) cur[q] = {b.input(owner[q]), b.input(owner[q])};
  std::vector<std::vector<std::vector<MaskWires>>> flip(cuts.size());
  for (size_t j = 0; j < cuts.size(); ++j) {
    flip[j].resize(nq);
    for (int q = 0; q < nq; ++q) {
      for (int p = 0; p < n; ++p) flip[j][q].push_back({b.input(p), b.input(p)});
    }
  }

  size_t next_gate = 0;
  auto push_until = [&](size_t stop) {
    for (; next_gate < stop; ++next_gate) {
      const auto& g = f.gates[next_gate];
      switch (g.kind) {
        case Gate::X:
        case Gate::Z:
          break;
        case Gate::H:
          std::swap(cur[g.t0].a, cur[g.t0].b);
          break;
        case Gate::P:
          cur[g.t0].b = b.gate_xor2(cur[g.t0].a, cur[g.t0].b);
          break;
        case Gate::CNOT:
          cur[g.t0].b = b.gate_xor2(cur[g.t0].b, cur[g.t1].b);
          cur[g.t1].a = b.gate_xor2(cur[g.t1].a, cur[g.t0].a);
          break;
        default:
          throw std::invalid_argument("push circuit: not a Clifford gate");
      }
    }
  };

  for (size_t j = 0; j < cuts.size(); ++j) {
    push_until(static_cast<size_t>(cuts[j]));
    for (int q = 0; q < nq; ++q) {
      std::vector<int> as, bs;
      for (int p = 0; p < n; ++p) {
        as.push_back(flip[j][q][p].a);
        bs.push_back(flip[j][q][p].b);
      }
      const int fa = b.gate_xor(std::move(as));
      const int fb = b.gate_xor(std::move(bs));
      b.add_output(fa);
      b.add_output(fb);
      cur[q].a = b.gate_xor2(cur[q].a, fa);
      cur[q].b = b.gate_xor2(cur[q].b, fb);
    }
  }
  push_until(f.gates.size());
  for (int q = 0; q < nq; ++q) {
    b.add_output(cur[q].a);
    b.add_output(cur[q].b);
  }
  return b.finish();
}

// One participant. Party 0 collects the padded lines, the others only feed
// the joint computation; its messages are relayed unchanged.
class CliffordMember final : public harness::Party {
 public:
  CliffordMember(Register& reg, const qsim::QuantumCircuit& f, const std::vector<int>& cuts,
                 int me, int num_parties, std::vector<int> owner, std::vector<Handle> own_input,
                 uint64_t seed, const CliffordOptions& options)
      : reg_(reg),
        f_(f),
        cuts_(cuts),
        me_(me),
        n_(num_parties),
        owner_(std::move(owner)),
        input_(std::move(own_input)),
        opt_(options),
        rng_(seed),
        push_(build_push_circuit(f, cuts_, owner_, n_)) {
    key_ = qsim::QotpKey::random(static_cast<int>(input_.size()), rng_);
    share_ = random_bits(2 * cuts_.size() * static_cast<size_t>(f_.num_qubits), rng_);
    if (opt_.zero_randomness) {
      for (auto& pair : key_.pairs) pair = {0, 0};
    }
    if (opt_.zero_randomness || !opt_.qubit_flipping) {
      share_.assign(share_.size(), 0);
    }

    BitVec inner_in;
    for (const auto& pair : key_.pairs) {
      inner_in.push_back(pair.a);
      inner_in.push_back(pair.b);
    }
    inner_in.insert(inner_in.end(), share_.begin(), share_.end());
    gmw::GmwOptions gopt;
    gopt.reveal_to = 0;
    inner_ = std::make_unique<gmw::GmwParty>(push_, me_, inner_in, mix_seed(seed, 0x636c66),
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
      if (me_ != 0) {
        Message m{me_, 0, "input", {}};
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
  std::vector<qsim::StateVec> take_snapshots() { return std::move(snapshots_); }
  std::vector<std::vector<pauli::MaskBit>> take_flips() { return std::move(flips_); }
  std::vector<pauli::MaskBit> take_corrections() { return std::move(corrections_); }

 private:
  // Runs inside one iteration once the joint bits arrive: apply the gates of
  // each segment to the padded lines, flip at each cut, correct at the end.
  void evaluate() {
    std::vector<Handle> all(owner_.size());
    std::vector<size_t> cursor(n_, 0);
    for (size_t q = 0; q < owner_.size(); ++q) {
      const int p = owner_[q];
      const auto& src = p == 0 ? input_ : foreign_input_.at(p);
      all[q] = src.at(cursor[p]++);
    }

    const int nq = f_.num_qubits;
    const BitVec& bits = inner_->outputs();
    if (bits.size() != 2 * static_cast<size_t>(nq) * (cuts_.size() + 1)) {
      throw std::runtime_error("joint outputs: size mismatch");
    }
    size_t s = 0;
    for (size_t j = 0; j < cuts_.size(); ++j) {
      std::vector<pauli::MaskBit> row(nq);
      for (int q = 0; q < nq; ++q) {
        row[q] = {bits[s], bits[s + 1]};
        s += 2;
      }
      flips_.push_back(std::move(row));
    }
    corrections_.resize(nq);
    for (int q = 0; q < nq; ++q) {
      corrections_[q] = {bits[s], bits[s + 1]};
      s += 2;
    }

    size_t next_gate = 0;
    auto run_until = [&](size_t stop) {
      for (; next_gate < stop; ++next_gate) {
        const auto& g = f_.gates[next_gate];
        if (qsim::gate_arity(g.kind) == 2) {
          reg_.gate(g.kind, all[g.t0], all[g.t1]);
        } else {
          reg_.gate(g.kind, all[g.t0]);
        }
      }
    };
    for (size_t j = 0; j < cuts_.size(); ++j) {
      run_until(static_cast<size_t>(cuts_[j]));
      if (opt_.record_boundaries) snapshots_.push_back(reg_.extract(all));
      for (int q = 0; q < nq; ++q) apply_pad(reg_, all[q], flips_[j][q].a, flips_[j][q].b);
    }
    run_until(f_.gates.size());
    for (int q = 0; q < nq; ++q) {
      if (corrections_[q].a) reg_.gate(Gate::X, all[q]);
      if (corrections_[q].b) reg_.gate(Gate::Z, all[q]);
    }
    outputs_ = all;
  }

  Register& reg_;
  const qsim::QuantumCircuit& f_;
  std::vector<int> cuts_;
  int me_;
  int n_;
  std::vector<int> owner_;
  std::vector<Handle> input_;
  CliffordOptions opt_;
  std::mt19937_64 rng_;
  gmw::BoolCircuit push_;
  qsim::QotpKey key_;
  BitVec share_;
  std::unique_ptr<gmw::GmwParty> inner_;
  std::map<int, std::vector<Handle>> foreign_input_;
  std::vector<Handle> outputs_;
  std::vector<qsim::StateVec> snapshots_;
  std::vector<std::vector<pauli::MaskBit>> flips_;
  std::vector<pauli::MaskBit> corrections_;
  bool result_sent_ = false;
};

}  // namespace

std::vector<pauli::MaskBit> apply_qubit_flipping(std::vector<pauli::MaskBit> masks,
                                                 const FlipShares& flips) {
  for (const auto& row : flips.shares) {
    if (row.size() > masks.size()) throw std::invalid_argument("flip share covers unknown wires");
    if (row.size() != flips.shares[0].size()) throw std::invalid_argument("ragged flip shares");
    for (size_t i = 0; i < row.size(); ++i) {
      masks[i].a ^= row[i].a;
      masks[i].b ^= row[i].b;
    }
  }
  return masks;
}

CliffordResult run_clifford(Register& reg, const qsim::QuantumCircuit& f,
                            const std::vector<int>& cuts,
                            const std::vector<std::vector<Handle>>& inputs, uint64_t seed,
                            const CliffordOptions& options) {
  const int n = static_cast<int>(inputs.size());
  if (n < 2) throw std::invalid_argument("run_clifford: need at least two parties");
  size_t total = 0;
  for (const auto& in : inputs) total += in.size();
  if (total != static_cast<size_t>(f.num_qubits)) {
    throw std::invalid_argument("run_clifford: inputs must cover the circuit lines");
  }
  for (const auto& g : f.gates) {
    if (g.kind == Gate::T) throw std::invalid_argument("run_clifford: circuit has a T gate");
  }
  for (size_t j = 0; j < cuts.size(); ++j) {
    const bool inside = cuts[j] > 0 && cuts[j] < static_cast<int>(f.gates.size());
    if (!inside || (j > 0 && cuts[j] <= cuts[j - 1])) {
      throw std::invalid_argument("run_clifford: cuts must increase strictly inside the circuit");
    }
  }
  std::vector<int> owner;
  for (int p = 0; p < n; ++p) owner.insert(owner.end(), inputs[p].size(), p);

  std::vector<std::unique_ptr<CliffordMember>> members;
  std::vector<harness::Party*> ptrs;
  for (int p = 0; p < n; ++p) {
    members.push_back(std::make_unique<CliffordMember>(reg, f, cuts, p, n, owner, inputs[p],
                                                       mix_seed(seed, p), options));
    ptrs.push_back(members.back().get());
  }
  auto run = harness::run_protocol(ptrs);

  CliffordResult res;
  res.run.outputs = members[0]->outputs();
  for (const auto& m : members) res.run.per_party.push_back(m->outputs());
  res.run.rounds_used = run.rounds_used;
  res.run.transcript = std::move(run.transcript);
  res.boundary_snapshots = members[0]->take_snapshots();
  res.combined_flips = members[0]->take_flips();
  res.final_corrections = members[0]->take_corrections();
  return res;
}

}  // namespace mpqc::protocols
