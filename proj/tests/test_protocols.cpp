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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>
#include <utility>
#include <vector>

#include "mpqc/gmw/engine.hpp"
#include "mpqc/harness/corpus.hpp"
#include "mpqc/pauliframe/pauli_mask.hpp"
#include "mpqc/protocols/clifford_path.hpp"
#include "mpqc/protocols/multi_party.hpp"
#include "mpqc/protocols/two_party.hpp"
#include "mpqc/qsim/register.hpp"
#include "mpqc/qsim/state_vector.hpp"

using namespace mpqc;
using qsim::Gate;
using qsim::Register;
using qsim::StateVec;

namespace {

constexpr double kEps = 1e-9;

// Deposits `state` into the register and splits the handles at `cut`: the
// first party owns lines [0, cut), the second the rest.
std::pair<std::vector<Register::Handle>, std::vector<Register::Handle>> deal_input(
    Register& reg, const StateVec& a, const StateVec& b) {
  auto ha = reg.add_state(a);
  auto hb = reg.add_state(b);
  return {std::move(ha), std::move(hb)};
}

// A depth-scalable circuit: `depth` repetitions of a T/H/CNOT block on two
// qubits. Every repetition adds gates but never changes the interface.
qsim::QuantumCircuit layered_circuit(int depth) {
  qsim::QuantumCircuit c{2, {}};
  for (int d = 0; d < depth; ++d) {
    c.gates.push_back({Gate::T, 0});
    c.gates.push_back({Gate::H, 1});
    c.gates.push_back({Gate::CNOT, 0, 1});
    c.gates.push_back({Gate::P, 1});
  }
  return c;
}

// T-free sibling of layered_circuit for the fast path.
qsim::QuantumCircuit layered_clifford(int depth) {
  qsim::QuantumCircuit c{2, {}};
  for (int d = 0; d < depth; ++d) {
    c.gates.push_back({Gate::H, 0});
    c.gates.push_back({Gate::P, 1});
    c.gates.push_back({Gate::CNOT, 0, 1});
    c.gates.push_back({Gate::Z, 0});
  }
  return c;
}

// Fidelity of qubit 0's reduced state in `joint` against a pure single-qubit
// `target`: sum over the other lines of the squared projection amplitude.
double line0_fidelity(const StateVec& joint, const StateVec& target) {
  double f = 0.0;
  for (int64_t k = 0; k < joint.size() / 2; ++k) {
    const std::complex<double> c = std::conj(target.amp(0)) * joint.amp(2 * k) +
                                   std::conj(target.amp(1)) * joint.amp(2 * k + 1);
    f += std::norm(c);
  }
  return f;
}

// The boundary observer of the fast-path audit: granted the cut snapshot and
// the revealed final corrections, it pushes the corrections backwards through
// the gates after the cut (the per-gate mask rules are their own inverses) and
// uses the result to unmask the snapshot. Returns the fidelity of the
// recovered first line against what that line holds in a plaintext run.
double boundary_recovery_fidelity(uint64_t seed, int probe_bit, bool flipping) {
  const qsim::QuantumCircuit f{
      2, {{Gate::H, 0}, {Gate::X, 1}, {Gate::CNOT, 0, 1}, {Gate::P, 0}}};
  const std::vector<int> cuts{2};
  Register reg(seed);
  std::vector<std::vector<Register::Handle>> inputs;
  inputs.push_back(reg.add_state(StateVec::basis(1, probe_bit)));
  inputs.push_back(reg.add_state(StateVec::basis(1, 0)));
  protocols::CliffordOptions opt;
  opt.qubit_flipping = flipping;
  opt.record_boundaries = true;
  const auto res = protocols::run_clifford(reg, f, cuts, inputs, seed, opt);

  std::vector<pauli::MaskBit> cand = res.final_corrections;
  for (size_t g = f.gates.size(); g-- > 2;) {
    const auto& gate = f.gates[g];
    if (gate.kind == Gate::CNOT) {
      auto [c, t] = pauli::conjugate_cnot(cand[gate.t0], cand[gate.t1]);
      cand[gate.t0] = c;
      cand[gate.t1] = t;
    } else {
      cand[gate.t0] = pauli::conjugate1(gate.kind, cand[gate.t0]);
    }
  }
  StateVec snap = res.boundary_snapshots.at(0);
  qsim::QuantumCircuit unmask{2, {}};
  for (int q = 0; q < 2; ++q) {
    if (cand[q].a) unmask.gates.push_back({Gate::X, q});
    if (cand[q].b) unmask.gates.push_back({Gate::Z, q});
  }
  qsim::apply_circuit(snap, unmask);

  StateVec target = StateVec::basis(1, probe_bit);
  const qsim::QuantumCircuit h{1, {{Gate::H, 0}}};
  qsim::apply_circuit(target, h);
  return line0_fidelity(snap, target);
}

}  // namespace

TEST_CASE("two-party evaluation of CNOT on |1>|1> lands on the oracle") {
  Register reg(901);
  const qsim::QuantumCircuit f{2, {{Gate::CNOT, 0, 1}}};
  const StateVec one = qsim::StateVec::basis(1, 1);
  auto [ha, hb] = deal_input(reg, one, one);
  const auto res = protocols::run_two_party(reg, f, ha, hb, 7);

  StateVec expect = qsim::tensor(one, one);
  qsim::apply_circuit(expect, f);
  CHECK(qsim::fidelity(reg.extract(res.outputs), expect) == doctest::Approx(1.0).epsilon(kEps));
  CHECK(res.rounds_used == 5);
  CHECK(res.per_party[0] == res.per_party[1]);
  CHECK(res.per_party[1] == res.outputs);
}

TEST_CASE("two-party identity returns the joint input untouched") {
  std::mt19937_64 rng(902);
  const qsim::QuantumCircuit f{3, {}};
  const StateVec x = qsim::random_state(2, rng);
  const StateVec y = qsim::random_state(1, rng);
  Register reg(903);
  auto [ha, hb] = deal_input(reg, x, y);
  const auto res = protocols::run_two_party(reg, f, ha, hb, 11);
  CHECK(qsim::fidelity(reg.extract(res.outputs), qsim::tensor(x, y)) ==
        doctest::Approx(1.0).epsilon(kEps));
}

TEST_CASE("two-party rounds do not move across a 20x depth sweep") {
  std::mt19937_64 rng(904);
  std::vector<int> rounds;
  for (int depth : {1, 2, 5, 10, 20}) {
    const auto f = layered_circuit(depth);
    Register reg(905 + depth);
    auto [ha, hb] = deal_input(reg, qsim::random_state(1, rng), qsim::random_state(1, rng));
    const auto res = protocols::run_two_party(reg, f, ha, hb, 13 + depth);
    rounds.push_back(res.rounds_used);
  }
  for (int r : rounds) CHECK(r == rounds.front());
  CHECK(rounds.front() == 5);
}

TEST_CASE("two-party output is exact on random layered circuits") {
  std::mt19937_64 rng(906);
  for (int depth : {1, 3}) {
    const auto f = layered_circuit(depth);
    for (int trial = 0; trial < 3; ++trial) {
      const StateVec x = qsim::random_state(1, rng);
      const StateVec y = qsim::random_state(1, rng);
      Register reg(907 + depth * 10 + trial);
      auto [ha, hb] = deal_input(reg, x, y);
      const auto res = protocols::run_two_party(reg, f, ha, hb, rng());
      StateVec expect = qsim::tensor(x, y);
      qsim::apply_circuit(expect, f);
      CHECK(qsim::fidelity(reg.extract(res.outputs), expect) ==
            doctest::Approx(1.0).epsilon(kEps));
    }
  }
}

TEST_CASE("two-party rejects inputs that do not cover the circuit") {
  Register reg(908);
  const qsim::QuantumCircuit f{2, {{Gate::H, 0}}};
  auto h = reg.add_state(qsim::StateVec::basis(1, 0));
  CHECK_THROWS_AS(protocols::run_two_party(reg, f, h, {}, 1), std::invalid_argument);
}

TEST_CASE("three parties evaluate a CNOT chain on |1>|0>|0>") {
  Register reg(911);
  const qsim::QuantumCircuit f{3, {{Gate::CNOT, 0, 1}, {Gate::CNOT, 1, 2}}};
  std::vector<std::vector<Register::Handle>> inputs;
  inputs.push_back(reg.add_state(qsim::StateVec::basis(1, 1)));
  inputs.push_back(reg.add_state(qsim::StateVec::basis(1, 0)));
  inputs.push_back(reg.add_state(qsim::StateVec::basis(1, 0)));
  const auto res = protocols::run_multi_party(reg, f, inputs, 17);

  StateVec expect = qsim::StateVec::basis(3, 1);
  qsim::apply_circuit(expect, f);
  CHECK(qsim::fidelity(reg.extract(res.outputs), expect) == doctest::Approx(1.0).epsilon(kEps));
  CHECK(res.rounds_used == 5);
  for (const auto& view : res.per_party) CHECK(view == res.outputs);
}

TEST_CASE("multi-party rounds do not move across a 20x depth sweep") {
  std::mt19937_64 rng(912);
  std::vector<int> rounds;
  for (int depth : {1, 2, 5, 10, 20}) {
    const auto f = layered_circuit(depth);
    Register reg(913 + depth);
    std::vector<std::vector<Register::Handle>> inputs;
    inputs.push_back(reg.add_state(qsim::random_state(1, rng)));
    inputs.push_back(reg.add_state(qsim::random_state(1, rng)));
    const auto res = protocols::run_multi_party(reg, f, inputs, 19 + depth, {.k = 2});
    rounds.push_back(res.rounds_used);
  }
  for (int r : rounds) CHECK(r == rounds.front());
  CHECK(rounds.front() == 5);
}

TEST_CASE("two-member multi-party run agrees with the two-party protocol") {
  std::mt19937_64 rng(914);
  const auto f = layered_circuit(2);
  for (int trial = 0; trial < 10; ++trial) {
    const StateVec x = qsim::random_state(1, rng);
    const StateVec y = qsim::random_state(1, rng);

    Register reg_a(9200 + trial);
    auto [ha, hb] = deal_input(reg_a, x, y);
    const auto two = protocols::run_two_party(reg_a, f, ha, hb, rng());

    Register reg_b(9300 + trial);
    std::vector<std::vector<Register::Handle>> inputs;
    inputs.push_back(reg_b.add_state(x));
    inputs.push_back(reg_b.add_state(y));
    const auto multi = protocols::run_multi_party(reg_b, f, inputs, rng(), {.k = 2});

    CHECK(qsim::fidelity(reg_a.extract(two.outputs), reg_b.extract(multi.outputs)) ==
          doctest::Approx(1.0).epsilon(kEps));
  }
}

TEST_CASE("multi-party rejects degenerate party layouts") {
  Register reg(915);
  const qsim::QuantumCircuit f{1, {{Gate::H, 0}}};
  auto h = reg.add_state(qsim::StateVec::basis(1, 0));
  CHECK_THROWS_AS(protocols::run_multi_party(reg, f, {h}, 1), std::invalid_argument);
  CHECK_THROWS_AS(protocols::run_multi_party(reg, f, {h, {}}, 1), std::invalid_argument);
}

TEST_CASE("clifford path sends H|0> to |+> in three rounds") {
  Register reg(921);
  const qsim::QuantumCircuit f{1, {{Gate::H, 0}}};
  std::vector<std::vector<Register::Handle>> inputs;
  inputs.push_back(reg.add_state(qsim::StateVec::basis(1, 0)));
  inputs.push_back({});
  const auto res = protocols::run_clifford(reg, f, {}, inputs, 23);

  StateVec expect = qsim::StateVec::basis(1, 0);
  qsim::apply_circuit(expect, f);
  CHECK(qsim::fidelity(reg.extract(res.run.outputs), expect) ==
        doctest::Approx(1.0).epsilon(kEps));
  CHECK(res.run.rounds_used == 3);
  CHECK(res.run.per_party[0] == res.run.per_party[1]);
}

TEST_CASE("clifford path is exact on random states, three parties, two cuts") {
  std::mt19937_64 rng(922);
  const auto f = layered_clifford(2);
  for (int trial = 0; trial < 5; ++trial) {
    const StateVec x = qsim::random_state(1, rng);
    const StateVec y = qsim::random_state(1, rng);
    Register reg(9230 + trial);
    std::vector<std::vector<Register::Handle>> inputs;
    inputs.push_back(reg.add_state(x));
    inputs.push_back(reg.add_state(y));
    inputs.push_back({});
    const auto res = protocols::run_clifford(reg, f, {3, 6}, inputs, rng());

    StateVec expect = qsim::tensor(x, y);
    qsim::apply_circuit(expect, f);
    CHECK(qsim::fidelity(reg.extract(res.run.outputs), expect) ==
          doctest::Approx(1.0).epsilon(kEps));
    CHECK(res.combined_flips.size() == 2);
    CHECK(res.final_corrections.size() == 2);
    for (const auto& view : res.run.per_party) CHECK(view == res.run.outputs);
  }
}

TEST_CASE("clifford rounds do not move across a 20x depth sweep") {
  std::mt19937_64 rng(924);
  std::vector<int> rounds;
  for (int depth : {1, 2, 5, 10, 20}) {
    const auto f = layered_clifford(depth);
    Register reg(925 + depth);
    std::vector<std::vector<Register::Handle>> inputs;
    inputs.push_back(reg.add_state(qsim::random_state(1, rng)));
    inputs.push_back(reg.add_state(qsim::random_state(1, rng)));
    const auto res = protocols::run_clifford(reg, f, {2}, inputs, 27 + depth);
    rounds.push_back(res.run.rounds_used);
  }
  for (int r : rounds) CHECK(r == rounds.front());
  CHECK(rounds.front() == 3);
}

TEST_CASE("clifford path rejects T gates and malformed cuts") {
  Register reg(926);
  const qsim::QuantumCircuit t{1, {{Gate::T, 0}}};
  auto h = reg.add_state(qsim::StateVec::basis(1, 0));
  CHECK_THROWS_AS(protocols::run_clifford(reg, t, {}, {h, {}}, 1), std::invalid_argument);

  const qsim::QuantumCircuit f{1, {{Gate::H, 0}, {Gate::P, 0}}};
  CHECK_THROWS_AS(protocols::run_clifford(reg, f, {0}, {h, {}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(protocols::run_clifford(reg, f, {2}, {h, {}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(protocols::run_clifford(reg, f, {1, 1}, {h, {}}, 1), std::invalid_argument);
}

TEST_CASE("zero randomness makes the masked run equal the plaintext run") {
  std::mt19937_64 rng(927);
  const auto f = layered_clifford(2);
  const std::vector<int> cuts{2, 5};
  const StateVec x = qsim::random_state(1, rng);
  const StateVec y = qsim::random_state(1, rng);
  Register reg(928);
  std::vector<std::vector<Register::Handle>> inputs;
  inputs.push_back(reg.add_state(x));
  inputs.push_back(reg.add_state(y));
  protocols::CliffordOptions opt;
  opt.zero_randomness = true;
  opt.record_boundaries = true;
  const auto res = protocols::run_clifford(reg, f, cuts, inputs, 29, opt);

  for (size_t j = 0; j < cuts.size(); ++j) {
    StateVec expect = qsim::tensor(x, y);
    qsim::QuantumCircuit prefix{f.num_qubits, {}};
    prefix.gates.assign(f.gates.begin(), f.gates.begin() + cuts[j]);
    qsim::apply_circuit(expect, prefix);
    CHECK(qsim::fidelity(res.boundary_snapshots.at(j), expect) ==
          doctest::Approx(1.0).epsilon(kEps));
    for (const auto& bit : res.combined_flips.at(j)) CHECK(bit == pauli::MaskBit{0, 0});
  }
  for (const auto& bit : res.final_corrections) CHECK(bit == pauli::MaskBit{0, 0});
  StateVec expect = qsim::tensor(x, y);
  qsim::apply_circuit(expect, f);
  CHECK(qsim::fidelity(reg.extract(res.run.outputs), expect) ==
        doctest::Approx(1.0).epsilon(kEps));
}

TEST_CASE("boundary observer recovers the cut state exactly without flipping") {
  std::mt19937_64 rng(929);
  for (int trial = 0; trial < 40; ++trial) {
    const double fid = boundary_recovery_fidelity(rng(), trial & 1, false);
    CHECK(fid == doctest::Approx(1.0).epsilon(kEps));
  }
}

TEST_CASE("qubit flipping pins the boundary observer to coin-flip fidelity") {
  // Uniform joint flips twirl the recovered line: each trial lands on 0 or 1,
  // averaging 0.5. Tolerance 0.02 is 4 sigma at 10^4 trials.
  std::mt19937_64 rng(930);
  const int trials = 10000;
  double sum = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    sum += boundary_recovery_fidelity(rng(), trial & 1, true);
  }
  const double avg = sum / trials;
  CHECK(avg > 0.48);
  CHECK(avg < 0.52);
}

TEST_CASE("apply_qubit_flipping XORs shares per wire and spares the tail") {
  using pauli::MaskBit;
  std::vector<MaskBit> masks{{1, 0}, {0, 1}, {1, 1}};

  protocols::FlipShares zero;
  zero.shares = {{{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}};
  CHECK(protocols::apply_qubit_flipping(masks, zero) == masks);

  protocols::FlipShares three;
  three.shares = {{{1, 0}}, {{0, 0}}, {{1, 0}}};
  const auto toggled = protocols::apply_qubit_flipping(masks, three);
  CHECK(toggled == masks);  // 1^0^1 toggles by 0

  protocols::FlipShares one;
  one.shares = {{{1, 1}, {0, 1}}};
  const auto flipped = protocols::apply_qubit_flipping(masks, one);
  CHECK(flipped[0] == MaskBit{0, 1});
  CHECK(flipped[1] == MaskBit{0, 0});
  CHECK(flipped[2] == MaskBit{1, 1});  // beyond the shares: untouched

  protocols::FlipShares ragged;
  ragged.shares = {{{1, 0}, {0, 0}}, {{1, 0}}};
  CHECK_THROWS_AS(protocols::apply_qubit_flipping(masks, ragged), std::invalid_argument);
}

TEST_CASE("every corpus circuit survives all three protocols") {
  // Trimmed sweep (two random inputs per circuit); the acceptance binary
  // repeats it at ten inputs per circuit and n up to 4.
  std::mt19937_64 rng(932);
  for (const auto& f : harness::quantum_corpus()) {
    bool t_free = true;
    for (const auto& g : f.gates) t_free &= g.kind != Gate::T;
    for (int trial = 0; trial < 2; ++trial) {
      const StateVec psi = qsim::random_state(f.num_qubits, rng);
      StateVec expect = psi;
      qsim::apply_circuit(expect, f);

      const auto sizes = harness::split_sizes(f.num_qubits, 2);
      Register reg_a(rng());
      auto handles = reg_a.add_state(psi);
      std::vector<Register::Handle> ha(handles.begin(), handles.begin() + sizes[0]);
      std::vector<Register::Handle> hb(handles.begin() + sizes[0], handles.end());
      const auto two = protocols::run_two_party(reg_a, f, ha, hb, rng());
      CHECK(qsim::fidelity(reg_a.extract(two.outputs), expect) ==
            doctest::Approx(1.0).epsilon(kEps));

      Register reg_b(rng());
      auto hm = reg_b.add_state(psi);
      std::vector<std::vector<Register::Handle>> split;
      size_t at = 0;
      for (int s : sizes) {
        split.emplace_back(hm.begin() + at, hm.begin() + at + s);
        at += s;
      }
      const auto multi = protocols::run_multi_party(reg_b, f, split, rng(), {.k = 2});
      CHECK(qsim::fidelity(reg_b.extract(multi.outputs), expect) ==
            doctest::Approx(1.0).epsilon(kEps));

      if (t_free) {
        Register reg_c(rng());
        auto hc = reg_c.add_state(psi);
        std::vector<std::vector<Register::Handle>> csplit;
        size_t cat = 0;
        for (int s : sizes) {
          csplit.emplace_back(hc.begin() + cat, hc.begin() + cat + s);
          cat += s;
        }
        const auto fast = protocols::run_clifford(reg_c, f, {}, csplit, rng());
        CHECK(qsim::fidelity(reg_c.extract(fast.run.outputs), expect) ==
              doctest::Approx(1.0).epsilon(kEps));
      }
    }
  }
}

TEST_CASE("gmw rounds grow with AND depth while protocol rounds hold still") {
  // The negative control for round constancy: the raw shared evaluation of
  // an AND ladder needs two extra rounds per level.
  std::vector<int> gmw_rounds;
  for (int depth : {1, 2, 5, 10, 20}) {
    const auto ladder = harness::and_ladder(2, depth);
    std::vector<BitVec> inputs(2);
    inputs[0].assign(ladder.inputs[0].size(), 1);
    inputs[1].assign(ladder.inputs[1].size(), 1);
    const auto res = gmw::run_gmw(ladder, inputs, 41 + depth);
    CHECK(res.outputs == BitVec{1});
    gmw_rounds.push_back(res.rounds_used);
  }
  for (size_t i = 1; i < gmw_rounds.size(); ++i) CHECK(gmw_rounds[i] > gmw_rounds[i - 1]);
}

TEST_CASE("any n-1 flip shares leave the joint flip uniform") {
  // 10^4 draws of three parties' shares; conditioned on parties 1 and 2's
  // bits, the flipped mask bit must stay a fair coin. Chi-square over the
  // four conditioning cells, 4 degrees of freedom: reject above 13.277
  // (p = 0.01).
  std::mt19937_64 rng(931);
  int count[4][2] = {};
  for (int draw = 0; draw < 10000; ++draw) {
    const uint8_t mask = rng() & 1;
    const uint8_t s0 = rng() & 1, s1 = rng() & 1, s2 = rng() & 1;
    protocols::FlipShares shares;
    shares.shares = {{{s0, 0}}, {{s1, 0}}, {{s2, 0}}};
    const auto flipped = protocols::apply_qubit_flipping({{mask, 0}}, shares);
    count[s1 * 2 + s2][flipped[0].a]++;
  }
  double chi2 = 0.0;
  for (auto& cell : count) {
    const double row = cell[0] + cell[1];
    REQUIRE(row > 0);
    chi2 += (cell[0] - row / 2) * (cell[0] - row / 2) / (row / 2);
    chi2 += (cell[1] - row / 2) * (cell[1] - row / 2) / (row / 2);
  }
  CHECK(chi2 < 13.277);
}
