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

#ifndef MPQC_QSIM_REGISTER_HPP_
#define MPQC_QSIM_REGISTER_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mpqc/qsim/state_vector.hpp"

namespace mpqc::qsim {

// A register of qubits held as a product of independent statevector factors.
// Factors merge lazily when a two-qubit gate spans them and shrink when
// qubits are measured out, so the amplitude cap applies per entangled group,
// not to the total number of live qubits.
//
// Qubits are addressed by stable integer handles; a handle dies when its
// qubit is measured.
class Register {
 public:
  using Handle = int;

  explicit Register(uint64_t seed) : rng_(seed) {}

  // Fresh |0> qubit in its own factor.
  Handle alloc_qubit() {
    int f = add_factor(StateVec(1));
    return register_handle(f, 0);
  }

  // Adopts an arbitrary prepared state; returns one handle per qubit,
  // ordered to match the state's own qubit indices.
  std::vector<Handle> add_state(StateVec state) {
    int n = state.num_qubits();
    int f = add_factor(std::move(state));
    std::vector<Handle> hs(n);
    for (int q = 0; q < n; ++q) hs[q] = register_handle(f, q);
    return hs;
  }

  std::pair<Handle, Handle> alloc_epr() {
    auto hs = add_state(make_epr());
    return {hs[0], hs[1]};
  }

  bool alive(Handle h) const {
    return h >= 0 && h < static_cast<int>(where_.size()) && where_[h].factor >= 0;
  }

  int num_live_qubits() const { return live_count_; }
  int peak_factor_width() const { return peak_width_; }
  int op_count(Handle h) const { return check(h), op_counts_[h]; }

  void gate(Gate g, Handle h0, Handle h1 = -1) {
    if (g == Gate::CNOT) {
      check(h0);
      check(h1);
      int f = merge(where_[h0].factor, where_[h1].factor);
      apply_cnot(factors_[f], where_[h0].qubit, where_[h1].qubit);
      ++op_counts_[h0];
      ++op_counts_[h1];
    } else {
      check(h0);
      auto& loc = where_[h0];
      apply_gate(factors_[loc.factor], g, loc.qubit);
      ++op_counts_[h0];
    }
  }

  void unitary1(const Matrix2<double>& m, Handle h) {
    check(h);
    apply_unitary1(factors_[where_[h].factor], m, where_[h].qubit);
    ++op_counts_[h];
  }

  // Measures in the Z basis, collapses, and retires the handle.
  int measure(Handle h) {
    check(h);
    auto loc = where_[h];
    int outcome = measure_z(factors_[loc.factor], loc.qubit, rng_);
    remove_from_factor(loc.factor, loc.qubit);
    where_[h] = {-1, -1};
    --live_count_;
    return outcome;
  }

  // Bell measurement of (h1, h2); both handles are retired. With h1 = source
  // and h2 = local EPR half, the remote half carries X^a Z^b of the source.
  std::pair<int, int> bell_measure(Handle h1, Handle h2) {
    gate(Gate::CNOT, h1, h2);
    gate(Gate::H, h1);
    int b = measure(h1);
    int a = measure(h2);
    return {a, b};
  }

  // Copies out the joint state of exactly the given handles, reordered so
  // handles[k] becomes qubit k. Throws if any other live qubit is entangled
  // with them (the state of the listed qubits alone would not be pure).
  StateVec extract(const std::vector<Handle>& handles) const {
    if (handles.empty()) throw std::invalid_argument("extract: no handles");
    for (Handle h : handles) check(h);
    std::vector<int> fs;
    for (Handle h : handles) fs.push_back(where_[h].factor);
    std::sort(fs.begin(), fs.end());
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());

    // Assemble the combined factor and each requested qubit's position in it.
    StateVec combined;
    std::vector<int> offset_of_factor(factors_.size(), -1);
    int total = 0;
    for (int f : fs) {
      offset_of_factor[f] = total;
      total += factors_[f].num_qubits();
      combined = combined.num_qubits() == 0 ? factors_[f] : tensor(combined, factors_[f]);
    }
    if (total != static_cast<int>(handles.size())) {
      throw std::invalid_argument("extract: handles share factors with other live qubits");
    }
    std::vector<int> src_pos(handles.size());
    for (size_t k = 0; k < handles.size(); ++k) {
      src_pos[k] = offset_of_factor[where_[handles[k]].factor] + where_[handles[k]].qubit;
    }
    StateVec::VectorT v(combined.size());
    for (int64_t j = 0; j < v.size(); ++j) {
      int64_t i = 0;
      for (size_t k = 0; k < handles.size(); ++k) {
        if (j & (int64_t{1} << k)) i |= int64_t{1} << src_pos[k];
      }
      v(j) = combined.amp(i);
    }
    return StateVec(total, std::move(v));
  }

  // Reduced density matrix of one live qubit, tracing out everything else.
  Matrix2<double> marginal(Handle h) const {
    check(h);
    return reduced_density_matrix(factors_[where_[h].factor], where_[h].qubit);
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  struct Loc {
    int factor = -1;
    int qubit = -1;
  };

  void check(Handle h) const {
    if (!alive(h)) throw std::out_of_range("dead or unknown qubit handle");
  }

  int add_factor(StateVec s) {
    peak_width_ = std::max(peak_width_, s.num_qubits());
    factors_.push_back(std::move(s));
    members_.emplace_back();
    return static_cast<int>(factors_.size()) - 1;
  }

  Handle register_handle(int factor, int qubit) {
    Handle h = static_cast<Handle>(where_.size());
    where_.push_back({factor, qubit});
    op_counts_.push_back(0);
    if (static_cast<int>(members_[factor].size()) <= qubit) {
      members_[factor].resize(qubit + 1, -1);
    }
    members_[factor][qubit] = h;
    ++live_count_;
    return h;
  }

  int merge(int f1, int f2) {
    if (f1 == f2) return f1;
    StateVec joined = tensor(factors_[f1], factors_[f2]);
    peak_width_ = std::max(peak_width_, joined.num_qubits());
    int base = factors_[f1].num_qubits();
    factors_[f1] = std::move(joined);
    for (int q = 0; q < static_cast<int>(members_[f2].size()); ++q) {
      Handle h = members_[f2][q];
      where_[h] = {f1, base + q};
      members_[f1].push_back(h);
    }
    factors_[f2] = StateVec();
    members_[f2].clear();
    return f1;
  }

  void remove_from_factor(int f, int q) {
    // The qubit was just collapsed, so prob_of_one is 0 or 1 exactly.
    int bit = prob_of_one(factors_[f], q) > 0.5 ? 1 : 0;
    factors_[f] = drop_qubit(factors_[f], q, bit);
    members_[f].erase(members_[f].begin() + q);
    for (int i = q; i < static_cast<int>(members_[f].size()); ++i) {
      where_[members_[f][i]].qubit = i;
    }
  }

  std::mt19937_64 rng_;
  std::vector<StateVec> factors_;
  std::vector<std::vector<Handle>> members_;  // factor -> handles by qubit index
  std::vector<Loc> where_;                    // handle -> location
  std::vector<int> op_counts_;
  int live_count_ = 0;
  int peak_width_ = 0;
};

}  // namespace mpqc::qsim

#endif  // MPQC_QSIM_REGISTER_HPP_
