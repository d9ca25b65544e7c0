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
#include "doctest.h"

#include <random>

#include "mpqc/gmw/bool_circuit.hpp"
#include "mpqc/gmw/engine.hpp"
#include "mpqc/harness/stats.hpp"

using namespace mpqc;
using namespace mpqc::gmw;

namespace {

// Splits `bits` into per-party input vectors matching circuit.inputs.
std::vector<BitVec> split_inputs(const BoolCircuit& c, uint64_t bits) {
  std::vector<BitVec> in(c.inputs.size());
  int k = 0;
  for (size_t p = 0; p < c.inputs.size(); ++p) {
    for (size_t i = 0; i < c.inputs[p].size(); ++i) {
      in[p].push_back((bits >> k++) & 1);
    }
  }
  return in;
}

int total_inputs(const BoolCircuit& c) {
  int k = 0;
  for (const auto& per : c.inputs) k += static_cast<int>(per.size());
  return k;
}

void check_exhaustive(const BoolCircuit& c, uint64_t seed) {
  int k = total_inputs(c);
  REQUIRE(k <= 8);
  for (uint64_t bits = 0; bits < (1ull << k); ++bits) {
    auto inputs = split_inputs(c, bits);
    auto result = run_gmw(c, inputs, seed + bits);
    CHECK(result.outputs == eval_plaintext(c, inputs));
  }
}

// Two parties, two bits each: a full adder plus a NOT-heavy tail.
// Wires: 0=x0 1=x1 (party 0), 2=y0 3=y1 (party 1).
BoolCircuit adderish() {
  BoolCircuit c;
  c.num_wires = 11;
  c.inputs = {{0, 1}, {2, 3}};
  c.gates = {
      {BoolOp::XOR, 4, {0, 2}},      // sum0
      {BoolOp::AND, 5, {0, 2}},      // carry0
      {BoolOp::XOR, 6, {1, 3, 5}},   // sum1
      {BoolOp::AND, 7, {1, 3}},      // depth 1
      {BoolOp::AND, 8, {5, 6}},      // depth 2 (6 depends on 5)
      {BoolOp::NOT, 9, {8}},
      {BoolOp::XOR, 10, {7, 9}},
  };
  c.outputs = {4, 6, 10};
  return c;
}

// Three parties, two bits each; majority plus cross-party products.
BoolCircuit three_party_mix() {
  BoolCircuit c;
  c.num_wires = 12;
  c.inputs = {{0, 1}, {2, 3}, {4, 5}};
  c.gates = {
      {BoolOp::AND, 6, {0, 2}},
      {BoolOp::AND, 7, {0, 4}},
      {BoolOp::AND, 8, {2, 4}},
      {BoolOp::XOR, 9, {6, 7, 8}},   // majority(x0, y0, z0)
      {BoolOp::NOT, 10, {1}},
      {BoolOp::AND, 11, {9, 10}},    // depth 2
  };
  c.outputs = {9, 11, 3, 5};
  return c;
}

BoolCircuit and_chain(int depth, int extra_parallel) {
  BoolCircuit c;
  int w = 0;
  std::vector<int> p0, p1;
  p0.push_back(w++);
  p1.push_back(w++);
  // Parallel ANDs at layer 0, all over the two input wires.
  std::vector<BoolGate> gates;
  std::vector<int> outs;
  for (int i = 0; i < extra_parallel; ++i) {
    gates.push_back({BoolOp::AND, w, {0, 1}});
    outs.push_back(w++);
  }
  int cur = 0;
  for (int d = 0; d < depth; ++d) {
    gates.push_back({BoolOp::AND, w, {cur, 1}});
    cur = w++;
  }
  outs.push_back(cur);
  c.num_wires = w;
  c.inputs = {p0, p1};
  c.gates = gates;
  c.outputs = outs;
  return c;
}

}  // namespace

TEST_CASE("share primitives reconstruct correctly") {
  std::mt19937_64 rng(1);
  for (int n : {2, 3, 5}) {
    for (int bit = 0; bit < 2; ++bit) {
      for (int rep = 0; rep < 20; ++rep) {
        BitVec s = share_bit(static_cast<uint8_t>(bit), n, rng);
        CHECK(s.size() == static_cast<size_t>(n));
        CHECK(reconstruct(s) == bit);
        shares_not(s);
        CHECK(reconstruct(s) == (bit ^ 1));
      }
    }
  }
}

TEST_CASE("AND tables hide everything except the masked product") {
  for (int x0 = 0; x0 < 2; ++x0)
    for (int y0 = 0; y0 < 2; ++y0)
      for (int r = 0; r < 2; ++r) {
        auto t2 = and2_table(x0, y0, r);
        auto tx = cross_table(x0, y0, r);
        for (int x1 = 0; x1 < 2; ++x1)
          for (int y1 = 0; y1 < 2; ++y1) {
            CHECK((r ^ t2[x1 * 2 + y1]) == ((x0 ^ x1) & (y0 ^ y1)));
            CHECK((r ^ tx[x1 * 2 + y1]) == ((x0 & y1) ^ (y0 & x1)));
          }
      }
}

TEST_CASE("plaintext evaluation matches hand-computed truth tables") {
  BoolCircuit c = adderish();
  c.validate();
  // x = 3 (bits 11), y = 1 (bits 10 -> y0=1, y1=0).
  auto out = eval_plaintext(c, {{1, 1}, {1, 0}});
  // sum0 = 0, carry0 = 1, sum1 = 1^0^1 = 0, w7 = 0, w8 = 1&0 = 0, w9 = 1, w10 = 1.
  CHECK(out == BitVec{0, 0, 1});
}

TEST_CASE("two-party execution is exhaustively correct") {
  check_exhaustive(adderish(), 10000);
}

TEST_CASE("three-party execution is exhaustively correct") {
  check_exhaustive(three_party_mix(), 20000);
}

TEST_CASE("five-party execution matches on random inputs") {
  BoolCircuit c;
  c.num_wires = 8;
  c.inputs = {{0}, {1}, {2}, {3}, {4}};
  c.gates = {
      {BoolOp::AND, 5, {0, 1}},
      {BoolOp::XOR, 6, {5, 2, 3}},
      {BoolOp::AND, 7, {6, 4}},
  };
  c.outputs = {7};
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 8; ++rep) {
    std::vector<BitVec> in;
    for (int p = 0; p < 5; ++p) in.push_back({static_cast<uint8_t>(rng() & 1)});
    auto result = run_gmw(c, in, 555 + rep);
    CHECK(result.outputs == eval_plaintext(c, in));
  }
}

TEST_CASE("round count is affine in AND depth, not gate count") {
  for (int depth : {1, 2, 3, 4}) {
    for (int parallel : {0, 7}) {
      BoolCircuit c = and_chain(depth, parallel);
      CHECK(c.and_depth() == depth);
      auto result = run_gmw(c, {{1}, {1}}, 42);
      CHECK(result.rounds_used == 1 + 2 * depth);
      CHECK(result.outputs == eval_plaintext(c, {{1}, {1}}));
    }
  }
}

TEST_CASE("XOR-only circuits settle in one counted round") {
  BoolCircuit c;
  c.num_wires = 5;
  c.inputs = {{0, 1}, {2}};
  c.gates = {{BoolOp::XOR, 3, {0, 2}}, {BoolOp::XOR, 4, {3, 1}}};
  c.outputs = {4};
  CHECK(c.xor_only());
  auto result = run_gmw(c, {{1, 0}, {1}}, 7);
  CHECK(result.rounds_used == 1);
  CHECK(result.outputs == BitVec{0});
}

TEST_CASE("output shares XOR to the outputs") {
  BoolCircuit c = adderish();
  auto inputs = split_inputs(c, 0b1011);
  auto result = run_gmw(c, inputs, 99);
  BitVec acc(c.outputs.size(), 0);
  for (const auto& os : result.output_shares) {
    REQUIRE(os.size() == acc.size());
    for (size_t i = 0; i < acc.size(); ++i) acc[i] ^= os[i];
  }
  CHECK(acc == result.outputs);
}

TEST_CASE("directed reveal sends output shares to the target only") {
  BoolCircuit c = adderish();
  auto inputs = split_inputs(c, 0b0110);
  GmwOptions opt;
  opt.reveal_to = 1;
  auto result = run_gmw(c, inputs, 123, opt);
  CHECK(result.outputs == eval_plaintext(c, inputs));
  for (const auto& round : result.transcript.rounds) {
    for (const auto& m : round.messages) {
      if (m.tag == "reveal") CHECK(m.to == 1);
    }
  }
}

TEST_CASE("the share a party receives says nothing about the input") {
  BoolCircuit c;
  c.num_wires = 3;
  c.inputs = {{0}, {1}};
  c.gates = {{BoolOp::AND, 2, {0, 1}}};
  c.outputs = {2};

  const int kRuns = 10000;
  std::vector<std::vector<uint64_t>> table(2, std::vector<uint64_t>(2, 0));
  std::mt19937_64 pick(8);
  for (int i = 0; i < kRuns; ++i) {
    uint8_t x = static_cast<uint8_t>(pick() & 1);
    auto result = run_gmw(c, {{x}, {1}}, 70000 + i);
    // Party 1's share of wire 0 is in the round-0 message 0 -> 1.
    const auto& msgs = result.transcript.rounds.at(0).messages;
    uint8_t seen = 0xff;
    for (const auto& m : msgs) {
      if (m.from == 0 && m.to == 1 && m.tag == "share") {
        size_t pos = 0;
        uint32_t wire = get_u32(m.payload, pos);
        REQUIRE(wire == 0);
        seen = m.payload[pos] & 1;
      }
    }
    REQUIRE(seen != 0xff);
    table[x][seen]++;
  }
  CHECK(stats::chi2_independence_pvalue(table) > 0.01);
}

TEST_CASE("runs are deterministic in the seed") {
  BoolCircuit c = three_party_mix();
  auto inputs = split_inputs(c, 0b101101);
  auto a = run_gmw(c, inputs, 31415);
  auto b = run_gmw(c, inputs, 31415);
  auto d = run_gmw(c, inputs, 92653);
  CHECK(a.transcript.to_json_string() == b.transcript.to_json_string());
  CHECK(a.transcript.to_json_string() != d.transcript.to_json_string());
  CHECK(a.outputs == d.outputs);  // different randomness, same function
}

TEST_CASE("structural validation rejects malformed circuits") {
  BoolCircuit c;
  c.num_wires = 3;
  c.inputs = {{0}, {1}};
  c.gates = {{BoolOp::AND, 1, {0, 1}}};  // writes an input wire
  c.outputs = {1};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);

  BoolCircuit d;
  d.num_wires = 3;
  d.inputs = {{0}, {1}};
  d.gates = {{BoolOp::AND, 2, {0, 5}}};  // reads out of range
  d.outputs = {2};
  CHECK_THROWS_AS(d.validate(), std::invalid_argument);

  BoolCircuit e;
  e.num_wires = 4;
  e.inputs = {{0}, {1}};
  e.gates = {{BoolOp::NOT, 2, {0}}};
  e.outputs = {3};  // never written
  CHECK_THROWS_AS(e.validate(), std::invalid_argument);
}
