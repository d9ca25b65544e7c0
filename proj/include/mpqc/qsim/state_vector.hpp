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

#ifndef MPQC_QSIM_STATE_VECTOR_HPP_
#define MPQC_QSIM_STATE_VECTOR_HPP_

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mpqc::qsim {

// Hard cap on register width. Exact amplitude simulation is exponential in
// qubit count; everything in this lab fits comfortably below this line.
inline constexpr int kMaxQubits = 14;

// Gate set used throughout: Clifford generators plus T.
enum class Gate : uint8_t { X, Z, H, P, CNOT, T };

inline int gate_arity(Gate g) { return g == Gate::CNOT ? 2 : 1; }

inline const char* gate_name(Gate g) {
  switch (g) {
    case Gate::X: return "X";
    case Gate::Z: return "Z";
    case Gate::H: return "H";
    case Gate::P: return "P";
    case Gate::CNOT: return "CNOT";
    case Gate::T: return "T";
  }
  return "?";
}

// Qubit ordering is little-endian: qubit 0 is the least-significant bit of
// the amplitude index. Stated here once; tests pin it down.
template <class fp_t = double>
class StateVector {
 public:
  using ComplexT = std::complex<fp_t>;
  using VectorT = Eigen::Matrix<ComplexT, Eigen::Dynamic, 1>;

  // Zero-qubit state: a single unit amplitude. Acts as the tensor identity.
  StateVector() : num_qubits_(0), amps_(VectorT::Constant(1, ComplexT(1, 0))) {}

  explicit StateVector(int num_qubits)
      : num_qubits_(check_width(num_qubits)),
        amps_(VectorT::Zero(int64_t{1} << num_qubits)) {
    amps_(0) = ComplexT(1, 0);
  }

  StateVector(int num_qubits, VectorT amplitudes)
      : num_qubits_(check_width(num_qubits)), amps_(std::move(amplitudes)) {
    if (amps_.size() != (int64_t{1} << num_qubits_)) {
      throw std::invalid_argument("amplitude vector length is not 2^num_qubits");
    }
    fp_t n = amps_.norm();
    if (std::abs(n - fp_t(1)) > fp_t(1e-9)) {
      throw std::invalid_argument("state vector is not normalized");
    }
  }

  static StateVector basis(int num_qubits, uint64_t bits) {
    StateVector s(num_qubits);
    s.amps_(0) = ComplexT(0, 0);
    s.amps_(static_cast<int64_t>(bits)) = ComplexT(1, 0);
    return s;
  }

  int num_qubits() const { return num_qubits_; }
  int64_t size() const { return amps_.size(); }
  const VectorT& amplitudes() const { return amps_; }
  VectorT& amplitudes() { return amps_; }
  ComplexT amp(uint64_t index) const { return amps_(static_cast<int64_t>(index)); }

  void check_qubit(int q) const {
    if (q < 0 || q >= num_qubits_) {
      throw std::out_of_range("qubit index " + std::to_string(q) +
                              " out of range for " + std::to_string(num_qubits_) +
                              " qubits");
    }
  }

 private:
  static int check_width(int num_qubits) {
    if (num_qubits < 0 || num_qubits > kMaxQubits) {
      throw std::invalid_argument("qubit count " + std::to_string(num_qubits) +
                                  " outside [0, " + std::to_string(kMaxQubits) + "]");
    }
    return num_qubits;
  }

  int num_qubits_;
  VectorT amps_;
};

using StateVec = StateVector<double>;

template <class fp_t>
using Matrix2 = Eigen::Matrix<std::complex<fp_t>, 2, 2>;

template <class fp_t = double>
Matrix2<fp_t> gate_matrix1(Gate g) {
  using C = std::complex<fp_t>;
  const fp_t r = fp_t(1) / std::sqrt(fp_t(2));
  Matrix2<fp_t> m;
  switch (g) {
    case Gate::X: m << C(0), C(1), C(1), C(0); break;
    case Gate::Z: m << C(1), C(0), C(0), C(-1); break;
    case Gate::H: m << C(r), C(r), C(r), C(-r); break;
    case Gate::P: m << C(1), C(0), C(0), C(0, 1); break;
    case Gate::T: m << C(1), C(0), C(0), C(r, r); break;
    case Gate::CNOT: throw std::invalid_argument("CNOT is not a 1-qubit gate");
  }
  return m;
}

// Applies an arbitrary single-qubit unitary in place.
template <class fp_t>
void apply_unitary1(StateVector<fp_t>& s, const Matrix2<fp_t>& m, int qubit) {
  s.check_qubit(qubit);
  auto& a = s.amplitudes();
  const int64_t bit = int64_t{1} << qubit;
  for (int64_t i = 0; i < a.size(); ++i) {
    if (i & bit) continue;
    auto a0 = a(i);
    auto a1 = a(i | bit);
    a(i) = m(0, 0) * a0 + m(0, 1) * a1;
    a(i | bit) = m(1, 0) * a0 + m(1, 1) * a1;
  }
}

template <class fp_t>
void apply_cnot(StateVector<fp_t>& s, int control, int target) {
  s.check_qubit(control);
  s.check_qubit(target);
  if (control == target) throw std::invalid_argument("CNOT targets must be distinct");
  auto& a = s.amplitudes();
  const int64_t cbit = int64_t{1} << control;
  const int64_t tbit = int64_t{1} << target;
  for (int64_t i = 0; i < a.size(); ++i) {
    if ((i & cbit) && !(i & tbit)) std::swap(a(i), a(i | tbit));
  }
}

template <class fp_t>
void apply_gate(StateVector<fp_t>& s, Gate g, int q0, int q1 = -1) {
  if (g == Gate::CNOT) {
    if (q1 < 0) throw std::invalid_argument("CNOT needs two targets");
    apply_cnot(s, q0, q1);
  } else {
    if (q1 >= 0) throw std::invalid_argument("1-qubit gate given two targets");
    apply_unitary1(s, gate_matrix1<fp_t>(g), q0);
  }
}

struct QuantumGate {
  Gate kind;
  int t0;       // single target, or CNOT control
  int t1 = -1;  // CNOT target
};

struct QuantumCircuit {
  int num_qubits = 0;
  std::vector<QuantumGate> gates;
};

template <class fp_t>
void apply_circuit(StateVector<fp_t>& s, const QuantumCircuit& c) {
  for (const auto& g : c.gates) apply_gate(s, g.kind, g.t0, g.t1);
}

// (|00> + |11>)/sqrt(2)
template <class fp_t = double>
StateVector<fp_t> make_epr() {
  using C = std::complex<fp_t>;
  typename StateVector<fp_t>::VectorT v(4);
  const fp_t r = fp_t(1) / std::sqrt(fp_t(2));
  v << C(r), C(0), C(0), C(r);
  return StateVector<fp_t>(2, std::move(v));
}

// Tensor product; b's qubits are appended above a's (a keeps indices 0..).
template <class fp_t>
StateVector<fp_t> tensor(const StateVector<fp_t>& a, const StateVector<fp_t>& b) {
  typename StateVector<fp_t>::VectorT v(a.size() * b.size());
  for (int64_t ib = 0; ib < b.size(); ++ib)
    for (int64_t ia = 0; ia < a.size(); ++ia)
      v(ib * a.size() + ia) = b.amp(ib) * a.amp(ia);
  return StateVector<fp_t>(a.num_qubits() + b.num_qubits(), std::move(v));
}

template <class fp_t>
fp_t prob_of_one(const StateVector<fp_t>& s, int qubit) {
  s.check_qubit(qubit);
  const int64_t bit = int64_t{1} << qubit;
  fp_t p = 0;
  for (int64_t i = 0; i < s.size(); ++i)
    if (i & bit) p += std::norm(s.amp(i));
  return p;
}

// Born-rule measurement in the Z basis; collapses and renormalizes in place.
template <class fp_t>
int measure_z(StateVector<fp_t>& s, int qubit, std::mt19937_64& rng) {
  fp_t p1 = prob_of_one(s, qubit);
  std::uniform_real_distribution<fp_t> u(fp_t(0), fp_t(1));
  int outcome = u(rng) < p1 ? 1 : 0;
  const int64_t bit = int64_t{1} << qubit;
  auto& a = s.amplitudes();
  fp_t keep = outcome ? p1 : fp_t(1) - p1;
  fp_t scale = fp_t(1) / std::sqrt(keep);
  for (int64_t i = 0; i < a.size(); ++i) {
    bool is_one = (i & bit) != 0;
    a(i) = (is_one == (outcome == 1)) ? a(i) * scale : std::complex<fp_t>(0, 0);
  }
  return outcome;
}

// Postselects `qubit` = `bit`; empty if that branch has (near-)zero weight.
template <class fp_t>
std::optional<StateVector<fp_t>> project(const StateVector<fp_t>& s, int qubit, int bit) {
  fp_t p1 = prob_of_one(s, qubit);
  fp_t keep = bit ? p1 : fp_t(1) - p1;
  if (keep < fp_t(1e-12)) return std::nullopt;
  StateVector<fp_t> out = s;
  const int64_t mask = int64_t{1} << qubit;
  auto& a = out.amplitudes();
  fp_t scale = fp_t(1) / std::sqrt(keep);
  for (int64_t i = 0; i < a.size(); ++i) {
    bool is_one = (i & mask) != 0;
    a(i) = (is_one == (bit == 1)) ? a(i) * scale : std::complex<fp_t>(0, 0);
  }
  return out;
}

// Removes a qubit that is in the definite classical state `bit`
// (e.g. right after measuring it). Indices above it shift down by one.
template <class fp_t>
StateVector<fp_t> drop_qubit(const StateVector<fp_t>& s, int qubit, int bit) {
  s.check_qubit(qubit);
  const int64_t lo = (int64_t{1} << qubit) - 1;
  typename StateVector<fp_t>::VectorT v(s.size() / 2);
  for (int64_t i = 0; i < v.size(); ++i) {
    int64_t full = (i & lo) | ((i & ~lo) << 1) | (int64_t{bit} << qubit);
    v(i) = s.amp(full);
  }
  return StateVector<fp_t>(s.num_qubits() - 1, std::move(v));
}

// Bell measurement of (q1, q2): rotates into the Bell basis and measures both.
// For teleportation with q1 = source and q2 = the local EPR half, the remote
// half ends up carrying X^a Z^b |psi> with a = outcome(q2), b = outcome(q1).
template <class fp_t>
std::pair<int, int> bell_measure(StateVector<fp_t>& s, int q1, int q2,
                                 std::mt19937_64& rng) {
  apply_cnot(s, q1, q2);
  apply_gate(s, Gate::H, q1);
  int b = measure_z(s, q1, rng);
  int a = measure_z(s, q2, rng);
  return {a, b};
}

// Teleports `src` through the EPR pair (epr_local, epr_remote); afterwards the
// remote half holds X^a Z^b times the source state. Source and local half are
// left collapsed (callers usually drop them).
template <class fp_t>
std::pair<int, int> teleport(StateVector<fp_t>& s, int src, int epr_local,
                             int epr_remote, std::mt19937_64& rng) {
  s.check_qubit(epr_remote);
  return bell_measure(s, src, epr_local, rng);
}

struct QotpKey {
  struct Pair {
    uint8_t a = 0;
    uint8_t b = 0;
  };
  std::vector<Pair> pairs;

  static QotpKey random(int num_qubits, std::mt19937_64& rng) {
    QotpKey k;
    k.pairs.resize(num_qubits);
    for (auto& p : k.pairs) {
      p.a = static_cast<uint8_t>(rng() & 1);
      p.b = static_cast<uint8_t>(rng() & 1);
    }
    return k;
  }
};

// One-time pad: X^a Z^b per qubit. Encrypt/decrypt are inverses up to a
// global phase (X and Z anticommute).
template <class fp_t>
void qotp_encrypt(StateVector<fp_t>& s, const QotpKey& key) {
  if (static_cast<int>(key.pairs.size()) != s.num_qubits()) {
    throw std::invalid_argument("QOTP key length does not match qubit count");
  }
  for (int q = 0; q < s.num_qubits(); ++q) {
    if (key.pairs[q].b) apply_gate(s, Gate::Z, q);
    if (key.pairs[q].a) apply_gate(s, Gate::X, q);
  }
}

template <class fp_t>
void qotp_decrypt(StateVector<fp_t>& s, const QotpKey& key) {
  if (static_cast<int>(key.pairs.size()) != s.num_qubits()) {
    throw std::invalid_argument("QOTP key length does not match qubit count");
  }
  for (int q = 0; q < s.num_qubits(); ++q) {
    if (key.pairs[q].a) apply_gate(s, Gate::X, q);
    if (key.pairs[q].b) apply_gate(s, Gate::Z, q);
  }
}

template <class fp_t>
fp_t fidelity(const StateVector<fp_t>& s1, const StateVector<fp_t>& s2) {
  if (s1.num_qubits() != s2.num_qubits()) {
    throw std::invalid_argument("fidelity: qubit counts differ");
  }
  std::complex<fp_t> ip = s1.amplitudes().dot(s2.amplitudes());
  return std::norm(ip);
}

// Single-qubit reduced density matrix (partial trace over everything else).
template <class fp_t>
Matrix2<fp_t> reduced_density_matrix(const StateVector<fp_t>& s, int qubit) {
  s.check_qubit(qubit);
  Matrix2<fp_t> rho = Matrix2<fp_t>::Zero();
  const int64_t bit = int64_t{1} << qubit;
  for (int64_t i = 0; i < s.size(); ++i) {
    if (i & bit) continue;
    auto a0 = s.amp(i);
    auto a1 = s.amp(i | bit);
    rho(0, 0) += a0 * std::conj(a0);
    rho(0, 1) += a0 * std::conj(a1);
    rho(1, 0) += a1 * std::conj(a0);
    rho(1, 1) += a1 * std::conj(a1);
  }
  return rho;
}

// Haar-ish random pure state (normalized complex Gaussian amplitudes).
template <class fp_t = double>
StateVector<fp_t> random_state(int num_qubits, std::mt19937_64& rng) {
  std::normal_distribution<fp_t> g(fp_t(0), fp_t(1));
  typename StateVector<fp_t>::VectorT v(int64_t{1} << num_qubits);
  for (int64_t i = 0; i < v.size(); ++i) v(i) = std::complex<fp_t>(g(rng), g(rng));
  v.normalize();
  return StateVector<fp_t>(num_qubits, std::move(v));
}

}  // namespace mpqc::qsim

#endif  // MPQC_QSIM_STATE_VECTOR_HPP_
