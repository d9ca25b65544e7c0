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

#include <random>
#include <vector>

#include "mpqc/dqre/encoding.hpp"
#include "mpqc/qsim/register.hpp"
#include "mpqc/qsim/state_vector.hpp"

using namespace mpqc;
using qsim::Gate;

namespace {

// Small circuits spanning all gate kinds; several carry two or more T gates,
// the case that forces non-Pauli corrections at decode time.
std::vector<qsim::QuantumCircuit> corpus() {
  std::vector<qsim::QuantumCircuit> cs;
  cs.push_back({1, {}});  // no gates: a bare masked teleport chain
  cs.push_back({1, {{Gate::H, 0}}});
  cs.push_back({1, {{Gate::T, 0}, {Gate::H, 0}, {Gate::T, 0}, {Gate::H, 0}}});
  cs.push_back({2, {{Gate::H, 0}, {Gate::CNOT, 0, 1}}});
  cs.push_back({2,
                {{Gate::T, 0},
                 {Gate::CNOT, 0, 1},
                 {Gate::T, 1},
                 {Gate::H, 0},
                 {Gate::CNOT, 1, 0},
                 {Gate::P, 0}}});
  cs.push_back({3,
                {{Gate::H, 0},
                 {Gate::CNOT, 0, 1},
                 {Gate::CNOT, 1, 2},
                 {Gate::T, 2},
                 {Gate::X, 0},
                 {Gate::T, 1},
                 {Gate::H, 2},
                 {Gate::CNOT, 0, 2}}});
  cs.push_back({4,
                {{Gate::H, 0},
                 {Gate::CNOT, 0, 1},
                 {Gate::T, 1},
                 {Gate::CNOT, 2, 3},
                 {Gate::T, 3},
                 {Gate::Z, 2},
                 {Gate::CNOT, 1, 2},
                 {Gate::P, 3}}});
  return cs;
}

int total_arity(const qsim::QuantumCircuit& c) {
  int r = 0;
  for (const auto& g : c.gates) r += qsim::gate_arity(g.kind);
  return r;
}

double decode_fidelity(const qsim::QuantumCircuit& circuit, const qsim::StateVec& psi,
                       uint64_t seed, const dqre::EncodeOptions& options = {},
                       bool tamper_input_frame = false, bool tamper_randomizer = false) {
  qsim::Register reg(seed);
  const auto handles = reg.add_state(psi);
  const auto program = dqre::compile(circuit);
  auto enc = dqre::encode(reg, handles, program, options);
  if (tamper_input_frame) enc.labels.input_frame[0].first ^= 1;
  if (tamper_randomizer) enc.labels.randomizers.back()[0].a ^= 1;
  const auto outs = dqre::decode(reg, program, enc.state, enc.labels);
  qsim::StateVec want = psi;
  qsim::apply_circuit(want, circuit);
  return qsim::fidelity(reg.extract(outs), want);
}

}  // namespace

TEST_CASE("compiled gadget chains mirror the circuit") {
  for (const auto& c : corpus()) {
    const auto prog = dqre::compile(c);
    REQUIRE(prog.gadgets.size() == c.gates.size() + 1);
    CHECK(prog.gadgets[0].gate_index == -1);
    CHECK(prog.gadgets[0].lines.size() == static_cast<size_t>(c.num_qubits));
    for (size_t gi = 1; gi < prog.gadgets.size(); ++gi) {
      const auto& g = c.gates[prog.gadgets[gi].gate_index];
      REQUIRE(prog.gadgets[gi].lines.size() ==
              static_cast<size_t>(qsim::gate_arity(g.kind)));
      CHECK(prog.gadgets[gi].lines[0] == g.t0);
      if (qsim::gate_arity(g.kind) == 2) CHECK(prog.gadgets[gi].lines[1] == g.t1);
    }
    CHECK(prog.epr_count() == c.num_qubits + total_arity(c));
  }
}

TEST_CASE("decoding recovers the circuit output exactly") {
  std::mt19937_64 rng(2026);
  uint64_t seed = 11;
  for (const auto& c : corpus()) {
    CAPTURE(c.gates.size());
    for (int trial = 0; trial < 20; ++trial) {
      const auto psi = qsim::random_state(c.num_qubits, rng);
      const double f = decode_fidelity(c, psi, seed++);
      CHECK(f == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("degenerate randomizers reduce to a plain teleport chain") {
  std::mt19937_64 rng(77);
  dqre::EncodeOptions opt;
  opt.trivial_randomizers = true;
  uint64_t seed = 500;
  for (const auto& c : corpus()) {
    const auto psi = qsim::random_state(c.num_qubits, rng);
    CHECK(decode_fidelity(c, psi, seed++, opt) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("encoding cost per qubit is constant in circuit depth") {
  // Alternating H/T chains of sharply different depth; the encode-time op
  // count of every live qubit must not grow with depth.
  for (int depth : {1, 4, 16, 64}) {
    qsim::QuantumCircuit c{1, {}};
    for (int i = 0; i < depth; ++i)
      c.gates.push_back({i % 2 == 0 ? Gate::H : Gate::T, 0});

    qsim::Register reg(33 + depth);
    std::mt19937_64 rng(9);
    const auto handles = reg.add_state(qsim::random_state(1, rng));
    const auto program = dqre::compile(c);
    const auto enc = dqre::encode(reg, handles, program);

    CHECK(reg.num_live_qubits() == 1 + 2 * total_arity(c));
    int max_ops = 0;
    for (const auto& gadget : enc.state.in_halves)
      for (auto h : gadget) max_ops = std::max(max_ops, reg.op_count(h));
    for (const auto& gadget : enc.state.out_halves)
      for (auto h : gadget) max_ops = std::max(max_ops, reg.op_count(h));
    CHECK(max_ops <= 3);

    // Decoding still works after the sweep.
    const auto outs = dqre::decode(reg, program, enc.state, enc.labels);
    CHECK(reg.num_live_qubits() == 1);
    CHECK(outs.size() == 1);
  }
}

TEST_CASE("every encoded qubit is maximally mixed") {
  // Fixed entangled input, 10^4 encodings. Input carriers cycle through all
  // eight mask-action classes exactly evenly, so the averaged marginals are
  // I/2 up to float error; EPR halves are I/2 in every single draw.
  const auto cs = corpus();
  const auto& c = cs[4];  // 2 qubits, CNOTs and two T gates
  const auto program = dqre::compile(c);

  std::mt19937_64 rng(1234);
  const auto psi = qsim::random_state(c.num_qubits, rng);

  const int kDraws = 10000;
  using M = qsim::Matrix2<double>;
  std::vector<M> acc_real, acc_sim;
  int slots = 0;

  for (int t = 0; t < kDraws; ++t) {
    dqre::EncodeOptions opt;
    for (int q = 0; q < c.num_qubits; ++q) opt.input_class_schedule.push_back((t + q) % 8);

    qsim::Register reg(88000 + t);
    const auto handles = reg.add_state(psi);
    const auto enc = dqre::encode(reg, handles, program, opt);

    qsim::Register sim_reg(99000 + t);
    const auto sim = dqre::simulate_encoding(sim_reg, program, opt);

    std::vector<M> real_draw, sim_draw;
    auto collect = [](qsim::Register& r, const dqre::EncodedState& st, std::vector<M>& out) {
      for (const auto& gadget : st.in_halves)
        for (auto h : gadget) out.push_back(r.marginal(h));
      for (const auto& gadget : st.out_halves)
        for (auto h : gadget) out.push_back(r.marginal(h));
    };
    collect(reg, enc.state, real_draw);
    collect(sim_reg, sim.state, sim_draw);

    if (t == 0) {
      slots = static_cast<int>(real_draw.size());
      REQUIRE(slots == static_cast<int>(sim_draw.size()));
      REQUIRE(slots == 2 * program.epr_count() - c.num_qubits);
      acc_real.assign(slots, M::Zero());
      acc_sim.assign(slots, M::Zero());
    }
    for (int s = 0; s < slots; ++s) {
      acc_real[s] += real_draw[s];
      acc_sim[s] += sim_draw[s];
    }
  }

  const M half = M::Identity() * 0.5;
  for (int s = 0; s < slots; ++s) {
    const M dev_real = acc_real[s] / kDraws - half;
    const M dev_sim = acc_sim[s] / kDraws - half;
    CHECK(dev_real.cwiseAbs().maxCoeff() <= 1e-3);
    CHECK(dev_sim.cwiseAbs().maxCoeff() <= 1e-3);
  }
}

TEST_CASE("tampered or missing labels break decoding") {
  std::mt19937_64 rng(31337);
  const auto cs = corpus();
  const auto& c = cs[4];
  const auto psi = qsim::random_state(c.num_qubits, rng);

  CHECK(decode_fidelity(c, psi, 600) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(decode_fidelity(c, psi, 601, {}, true, false) < 0.999);
  CHECK(decode_fidelity(c, psi, 602, {}, false, true) < 0.999);

  // A dropped label is detected before any measurement happens.
  qsim::Register reg(603);
  const auto handles = reg.add_state(psi);
  const auto program = dqre::compile(c);
  auto enc = dqre::encode(reg, handles, program);
  enc.labels.randomizers.back().pop_back();
  CHECK_THROWS_AS(dqre::decode(reg, program, enc.state, enc.labels),
                  std::invalid_argument);
}
