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

#ifndef MPQC_GMW_ENGINE_HPP_
#define MPQC_GMW_ENGINE_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "mpqc/bits.hpp"
#include "mpqc/crypto/ot.hpp"
#include "mpqc/gmw/bool_circuit.hpp"
#include "mpqc/harness/network.hpp"

namespace mpqc::gmw {

// --- Share arithmetic (local, no network) ---

// XOR-shares a bit among n parties.
BitVec share_bit(uint8_t bit, int n, std::mt19937_64& rng);

inline uint8_t reconstruct(const BitVec& shares) {
  uint8_t v = 0;
  for (uint8_t s : shares) v ^= s;
  return v;
}

// NOT folds into party 0's share; everyone else is untouched.
inline void shares_not(BitVec& shares) { shares[0] ^= 1; }

// Sender-side table for the two-party AND. The receiver holding shares
// (b1, b2) opens entry b1*2+b2 and gets r XOR (x AND y) for the true values
// x = x0^b1, y = y0^b2; the sender's share is r.
std::array<uint8_t, 4> and2_table(uint8_t x0, uint8_t y0, uint8_t r);

// Sender-side table for one cross pair of the n-party AND. The receiver j
// with shares (b1, b2) = (x_j, y_j) gets r ^ x_i*y_j ^ y_i*x_j; the sender i
// keeps r. Diagonal terms x_p*y_p stay local.
std::array<uint8_t, 4> cross_table(uint8_t xi, uint8_t yi, uint8_t r);

// --- Networked execution ---

struct GmwOptions {
  // -1: output shares are broadcast and everyone reconstructs.
  // Otherwise only this party learns the outputs (directed reveal).
  int reveal_to = -1;
};

struct GmwResult {
  BitVec outputs;                          // reconstructed by the revealing target
  std::vector<BitVec> output_shares;       // per party, before the reveal
  int rounds_used = 0;                     // 1 + 2 * AND-depth; reveal excluded
  harness::Transcript transcript;
};

// One party of the shared execution, public so larger protocols can embed a
// GMW evaluation inside their own message schedule: construct one instance
// per party, relay messages tagged "share" / "ot-req" / "ot-resp" / "reveal"
// unchanged, and forward step() calls with iterations starting at zero. The
// referenced circuit must outlive the party. Progress is driven entirely by
// inbox contents; the only unprompted action is distributing input shares at
// iteration 0.
//
// Per AND gate, party i is the OT sender towards every j > i (one ot4 per
// pair) and receiver towards every j < i. With two parties this degenerates
// to: party 0 builds the full AND table, party 1's share is the opened entry.
class GmwParty : public harness::Party {
 public:
  GmwParty(const BoolCircuit& c, int me, BitVec my_inputs, uint64_t seed,
           const GmwOptions& opt);

  std::vector<harness::Message> step(int iteration,
                                     const std::vector<harness::Message>& inbox) override;
  bool done() const override;

  const BitVec& final_share() const { return share_; }
  // Reconstructed output bits. Empty until every expected reveal arrived;
  // parties excluded by a directed reveal never fill it.
  const BitVec& outputs() const { return outputs_; }

 private:
  void send_input_shares(std::vector<harness::Message>& out);
  void absorb_shares(const harness::Message& m);
  void propagate();
  void advance(std::vector<harness::Message>& out);
  void respond(const harness::Message& m, std::vector<harness::Message>& out);
  void finish(const harness::Message& m);
  void maybe_commit(int gate_idx);
  void maybe_reveal(std::vector<harness::Message>& out);
  int expected_reveals() const;
  void absorb_reveal(const harness::Message& m);

  const BoolCircuit& c_;
  int me_;
  int n_;
  BitVec my_inputs_;
  std::mt19937_64 rng_;
  GmwOptions opt_;

  BitVec share_;
  std::vector<bool> have_;
  std::vector<std::vector<int>> layers_;

  size_t expected_share_items_ = 0;
  size_t received_share_items_ = 0;

  int current_layer_ = 0;
  bool advanced_ = false;
  int committed_ = 0;
  std::map<std::pair<int, int>, crypto::OtReceiver> ot_state_;  // (gate, sender)
  std::map<int, uint8_t> and_acc_;
  std::map<int, int> receiver_done_;
  std::map<int, int> sender_done_;

  bool revealed_ = false;
  int reveals_seen_ = 0;
  BitVec outputs_acc_;
  BitVec outputs_;
};

// Runs the circuit on XOR shares across num_parties() simulated parties.
// inputs[p] lines up with circuit.inputs[p]. The round count is the number
// of message-bearing exchanges needed to hold the output *shares*: one for
// input distribution plus an OT round-trip per AND layer. Publishing the
// shares afterwards is recorded in the transcript (tag "reveal") but not
// counted, since where shares flow is the embedding protocol's business.
GmwResult run_gmw(const BoolCircuit& circuit, const std::vector<BitVec>& inputs,
                  uint64_t seed, const GmwOptions& options = {});

}  // namespace mpqc::gmw

#endif  // MPQC_GMW_ENGINE_HPP_
