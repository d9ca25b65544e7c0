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

#include <complex>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "mpqc/pauliframe/pauli_mask.hpp"
#include "mpqc/pauliframe/px_group.hpp"
#include "mpqc/qsim/state_vector.hpp"

using namespace mpqc;
using namespace mpqc::pauli;
using qsim::Gate;
using qsim::StateVec;
using C = std::complex<double>;
using M2 = qsim::Matrix2<double>;
using M4 = Eigen::Matrix<C, 4, 4>;

namespace {

constexpr double kTol = 1e-12;

M2 pauli_matrix(int a, int b) {
  M2 m = M2::Identity();
  if (b) m = qsim::gate_matrix1<double>(Gate::Z) * m;
  if (a) m = qsim::gate_matrix1<double>(Gate::X) * m;
  return m;
}

// True iff B = e^{i theta} A for some theta, entrywise within kTol.
template <class M>
bool proportional(const M& a, const M& b) {
  C ip = (a.adjoint() * b).trace();
  if (std::abs(ip) < 1e-6) return false;
  C phase = ip / std::abs(ip);
  return ((a * phase) - b).cwiseAbs().maxCoeff() < kTol;
}

// kron with `hi` acting on qubit 1 and `lo` on qubit 0 (little-endian index).
M4 kron2(const M2& hi, const M2& lo) {
  M4 out;
  for (int r1 = 0; r1 < 2; ++r1)
    for (int r0 = 0; r0 < 2; ++r0)
      for (int c1 = 0; c1 < 2; ++c1)
        for (int c0 = 0; c0 < 2; ++c0)
          out(r1 * 2 + r0, c1 * 2 + c0) = hi(r1, c1) * lo(r0, c0);
  return out;
}

// CNOT with control = qubit 0, target = qubit 1.
M4 cnot_matrix() {
  M4 u = M4::Zero();
  for (int i = 0; i < 4; ++i) {
    int q0 = i & 1, q1 = (i >> 1) & 1;
    u(((q1 ^ q0) << 1) | q0, i) = 1.0;
  }
  return u;
}

qsim::QuantumCircuit random_circuit(int nq, int ngates, bool with_t, std::mt19937_64& rng) {
  qsim::QuantumCircuit c;
  c.num_qubits = nq;
  for (int i = 0; i < ngates; ++i) {
    int pick = static_cast<int>(rng() % (with_t ? 6 : 5));
    Gate g = static_cast<Gate>(pick == 5 ? static_cast<int>(Gate::T) : pick);
    if (!with_t && g == Gate::T) g = Gate::H;
    if (g == Gate::CNOT && nq >= 2) {
      int a = static_cast<int>(rng() % nq);
      int b = static_cast<int>(rng() % nq);
      if (a == b) b = (b + 1) % nq;
      c.gates.push_back({Gate::CNOT, a, b});
    } else {
      if (g == Gate::CNOT) g = Gate::P;
      c.gates.push_back({g, static_cast<int>(rng() % nq)});
    }
  }
  return c;
}

void apply_mask(StateVec& s, const PauliMask& m) {
  for (int q = 0; q < m.size(); ++q) {
    if (m.bits[q].b) qsim::apply_gate(s, Gate::Z, q);
    if (m.bits[q].a) qsim::apply_gate(s, Gate::X, q);
  }
}

}  // namespace

// Brute-force oracle: the unique (a', b') with G X^a Z^b proportional to
// X^{a'} Z^{b'} G, found by trying all four candidates.
TEST_CASE("single-qubit Clifford conjugation matches the matrix oracle") {
  for (Gate g : {Gate::X, Gate::Z, Gate::H, Gate::P}) {
    M2 gm = qsim::gate_matrix1<double>(g);
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        int found = 0;
        MaskBit oracle{};
        for (int a2 = 0; a2 < 2; ++a2)
          for (int b2 = 0; b2 < 2; ++b2)
            if (proportional(M2(gm * pauli_matrix(a, b)),
                             M2(pauli_matrix(a2, b2) * gm))) {
              oracle = {static_cast<uint8_t>(a2), static_cast<uint8_t>(b2)};
              ++found;
            }
        REQUIRE(found == 1);
        MaskBit got = conjugate1(g, {static_cast<uint8_t>(a), static_cast<uint8_t>(b)});
        CHECK(got == oracle);
      }
    }
  }
}

TEST_CASE("CNOT conjugation matches both the frozen table and the matrix oracle") {
  // Rows indexed by (ac, bc, at, bt) as a 4-bit number; entries are the
  // conjugated (ac', bc', at', bt'). Pinned here on purpose.
  static const uint8_t kFrozen[16][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}, {0, 1, 1, 1},
      {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1},
      {1, 0, 1, 0}, {1, 1, 1, 1}, {1, 0, 0, 0}, {1, 1, 0, 1},
      {1, 1, 1, 0}, {1, 0, 1, 1}, {1, 1, 0, 0}, {1, 0, 0, 1},
  };
  M4 u = cnot_matrix();
  for (int idx = 0; idx < 16; ++idx) {
    int ac = (idx >> 3) & 1, bc = (idx >> 2) & 1, at = (idx >> 1) & 1, bt = idx & 1;
    M4 in = kron2(pauli_matrix(at, bt), pauli_matrix(ac, bc));
    int found = 0;
    uint8_t oracle[4] = {0, 0, 0, 0};
    for (int o = 0; o < 16; ++o) {
      int a2c = (o >> 3) & 1, b2c = (o >> 2) & 1, a2t = (o >> 1) & 1, b2t = o & 1;
      M4 out = kron2(pauli_matrix(a2t, b2t), pauli_matrix(a2c, b2c));
      if (proportional(M4(u * in), M4(out * u))) {
        oracle[0] = a2c; oracle[1] = b2c; oracle[2] = a2t; oracle[3] = b2t;
        ++found;
      }
    }
    REQUIRE(found == 1);
    for (int k = 0; k < 4; ++k) CHECK(oracle[k] == kFrozen[idx][k]);

    auto [c2, t2] = conjugate_cnot({static_cast<uint8_t>(ac), static_cast<uint8_t>(bc)},
                                   {static_cast<uint8_t>(at), static_cast<uint8_t>(bt)});
    CHECK(c2.a == kFrozen[idx][0]);
    CHECK(c2.b == kFrozen[idx][1]);
    CHECK(t2.a == kFrozen[idx][2]);
    CHECK(t2.b == kFrozen[idx][3]);
  }
}

TEST_CASE("pushing a Pauli through T costs exactly the pinned P power") {
  M2 tm = qsim::gate_matrix1<double>(Gate::T);
  M2 pm = qsim::gate_matrix1<double>(Gate::P);
  // (a, b) -> (a', b', p), all four cases pinned.
  static const uint8_t kCases[4][5] = {
      {0, 0, 0, 0, 0}, {0, 1, 0, 1, 0}, {1, 0, 1, 1, 1}, {1, 1, 1, 0, 1}};
  for (const auto& row : kCases) {
    int a = row[0], b = row[1];
    int found = 0;
    std::tuple<int, int, int> oracle;
    for (int a2 = 0; a2 < 2; ++a2)
      for (int b2 = 0; b2 < 2; ++b2)
        for (int p = 0; p < 2; ++p) {
          M2 rhs = pauli_matrix(a2, b2);
          if (p) rhs = rhs * pm;
          if (proportional(M2(tm * pauli_matrix(a, b)), M2(rhs * tm))) {
            oracle = {a2, b2, p};
            ++found;
          }
        }
    REQUIRE(found == 1);
    CHECK(std::get<0>(oracle) == row[2]);
    CHECK(std::get<1>(oracle) == row[3]);
    CHECK(std::get<2>(oracle) == row[4]);

    TConjugation tc = conjugate_through_T({row[0], row[1]});
    CHECK(tc.mask.a == row[2]);
    CHECK(tc.mask.b == row[3]);
    CHECK(tc.p == row[4]);
  }
}

TEST_CASE("conjugate_through_clifford validates its inputs") {
  PauliMask one = PauliMask::zero(1);
  PauliMask two = PauliMask::zero(2);
  CHECK_THROWS_AS(conjugate_through_clifford(Gate::T, one), std::invalid_argument);
  CHECK_THROWS_AS(conjugate_through_clifford(Gate::CNOT, one), std::invalid_argument);
  CHECK_THROWS_AS(conjugate_through_clifford(Gate::H, two), std::invalid_argument);
  CHECK_NOTHROW(conjugate_through_clifford(Gate::CNOT, two));
}

namespace {
std::vector<PXElement> all_px() {
  std::vector<PXElement> v;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        v.push_back({static_cast<uint8_t>(a), static_cast<uint8_t>(b),
                     static_cast<uint8_t>(c)});
  return v;
}
}  // namespace

TEST_CASE("the phase/X/P group closes at exactly 32 elements") {
  // Closure from generators under the composition law.
  std::set<std::tuple<int, int, int>> seen;
  std::vector<PXElement> frontier = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (auto& e : frontier) seen.insert({e.a, e.b, e.c});
  while (!frontier.empty()) {
    std::vector<PXElement> next;
    for (const auto& e : frontier) {
      for (const auto& g : std::vector<PXElement>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) {
        PXElement f = px_compose(g, e);
        if (seen.insert({f.a, f.b, f.c}).second) next.push_back(f);
      }
    }
    frontier = std::move(next);
  }
  CHECK(seen.size() == 32);
}

TEST_CASE("composition reproduces matrix products exactly, phases included") {
  auto elems = all_px();
  for (const auto& e1 : elems) {
    for (const auto& e2 : elems) {
      M2 expect = px_matrix(e1) * px_matrix(e2);
      M2 got = px_matrix(px_compose(e1, e2));
      CHECK((expect - got).cwiseAbs().maxCoeff() < kTol);
    }
  }
}

TEST_CASE("composition is associative on all 32^3 triples") {
  auto elems = all_px();
  for (const auto& e1 : elems)
    for (const auto& e2 : elems)
      for (const auto& e3 : elems) {
        PXElement lhs = px_compose(px_compose(e1, e2), e3);
        PXElement rhs = px_compose(e1, px_compose(e2, e3));
        REQUIRE(lhs == rhs);
      }
}

TEST_CASE("every element composes with its inverse to the identity") {
  for (const auto& e : all_px()) {
    CHECK(px_compose(e, px_invert(e)) == px_identity());
    CHECK(px_compose(px_invert(e), e) == px_identity());
  }
}

TEST_CASE("conjugated form is the H-sandwich of the plain matrix") {
  M2 h = qsim::gate_matrix1<double>(Gate::H);
  for (const auto& e : all_px()) {
    M2 expect = h * px_matrix(e) * h;
    CHECK((expect - px_matrix(e, true)).cwiseAbs().maxCoeff() < kTol);
  }
}

TEST_CASE("deferring a mask through Clifford circuits matches simulation") {
  std::mt19937_64 rng(2020);
  for (int trial = 0; trial < 40; ++trial) {
    auto circuit = random_circuit(3, 10, /*with_t=*/false, rng);
    PauliMask mask = PauliMask::random(3, rng);
    StateVec psi = qsim::random_state(3, rng);

    StateVec lhs = psi;
    apply_mask(lhs, mask);
    qsim::apply_circuit(lhs, circuit);

    DeferResult r = defer_pauli(circuit, mask);
    CHECK(r.p_corrections.empty());
    StateVec rhs = psi;
    qsim::apply_circuit(rhs, circuit);
    apply_mask(rhs, r.final_mask);

    CHECK(qsim::fidelity(lhs, rhs) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

// With T gates the frame is only maintainable if each T site applies a
// physical fix-up: the P power reported by defer_pauli, conjugated into the
// current frame. This is the contract the gadget decoder relies on.
TEST_CASE("deferring through T circuits works given the reported P corrections") {
  std::mt19937_64 rng(3030);
  for (int trial = 0; trial < 40; ++trial) {
    auto circuit = random_circuit(3, 10, /*with_t=*/true, rng);
    PauliMask mask = PauliMask::random(3, rng);
    StateVec psi = qsim::random_state(3, rng);

    DeferResult r = defer_pauli(circuit, mask);

    // Masked run with fix-ups, tracking the frame gate by gate.
    StateVec lhs = psi;
    apply_mask(lhs, mask);
    PauliMask frame = mask;
    size_t t_index = 0;
    for (const auto& g : circuit.gates) {
      qsim::apply_gate(lhs, g.kind, g.t0, g.t1);
      switch (g.kind) {
        case Gate::CNOT: {
          auto [c, t] = conjugate_cnot(frame.bits[g.t0], frame.bits[g.t1]);
          frame.bits[g.t0] = c;
          frame.bits[g.t1] = t;
          break;
        }
        case Gate::T: {
          TConjugation tc = conjugate_through_T(frame.bits[g.t0]);
          frame.bits[g.t0] = tc.mask;
          REQUIRE(t_index < r.p_corrections.size());
          CHECK(tc.p == r.p_corrections[t_index]);
          // K = (X^a' Z^b') P^{-p} (X^a' Z^b')^{-1}, applied physically.
          PXElement xz = px_from_pauli(tc.mask.a, tc.mask.b);
          PXElement pinv{0, static_cast<uint8_t>((4 - tc.p) % 4), 0};
          PXElement k = px_compose(px_compose(xz, pinv), px_invert(xz));
          qsim::apply_unitary1(lhs, px_matrix(k), g.t0);
          ++t_index;
          break;
        }
        default:
          frame.bits[g.t0] = conjugate1(g.kind, frame.bits[g.t0]);
      }
    }
    CHECK(t_index == r.p_corrections.size());
    CHECK(frame == r.final_mask);

    StateVec rhs = psi;
    qsim::apply_circuit(rhs, circuit);
    apply_mask(rhs, r.final_mask);
    CHECK(qsim::fidelity(lhs, rhs) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("defer_pauli rejects mismatched widths") {
  qsim::QuantumCircuit c;
  c.num_qubits = 2;
  CHECK_THROWS_AS(defer_pauli(c, PauliMask::zero(3)), std::invalid_argument);
}
