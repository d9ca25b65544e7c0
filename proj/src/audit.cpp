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

#include "mpqc/harness/audit.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

#include "mpqc/bits.hpp"
#include "mpqc/bmr/garble.hpp"
#include "mpqc/crypto/ot.hpp"
#include "mpqc/gmw/builder.hpp"
#include "mpqc/harness/stats.hpp"
#include "mpqc/protocols/two_party.hpp"
#include "mpqc/qsim/register.hpp"
#include "mpqc/qsim/state_vector.hpp"

namespace mpqc::harness {
namespace {

using qsim::StateVec;

// Every check seeds its own generator from (config.seed, tag), so reports are
// reproducible and no check's outcome depends on the order they run in.
constexpr uint64_t kTagQotp = 0x61754f01;
constexpr uint64_t kTagOt = 0x61754f02;
constexpr uint64_t kTagLabels = 0x61754f03;
constexpr uint64_t kTagFlips = 0x61754f04;
constexpr uint64_t kTagTranscript = 0x61754f05;
constexpr uint64_t kTagChannel = 0x61754f06;

constexpr double kExact = 1e-12;  // machine-precision identities
constexpr double kAlpha = 0.01;   // chi-square significance floor

// Predictor accuracies are compared against chance plus three standard
// errors of the evaluation sample.
double accuracy_threshold(int eval_samples) {
  return 0.5 + 3.0 * std::sqrt(0.25 / static_cast<double>(eval_samples));
}

// The four pad keys average any qubit to I/2 exactly; this is what hides the
// wire states. Sabotage keeps only the identity key, leaving the state bare.
AuditCheck check_qotp_mixing(const AuditConfig& cfg) {
  std::mt19937_64 rng(mix_seed(cfg.seed, kTagQotp));
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    StateVec psi = qsim::random_state(1, rng);
    qsim::Matrix2<double> avg = qsim::Matrix2<double>::Zero();
    int keys = 0;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        if (cfg.sabotage_qotp && (a | b)) continue;
        StateVec enc = psi;
        qsim::QotpKey key;
        key.pairs = {{static_cast<uint8_t>(a), static_cast<uint8_t>(b)}};
        qotp_encrypt(enc, key);
        avg += reduced_density_matrix(enc, 0);
        ++keys;
      }
    }
    avg /= static_cast<double>(keys);
    qsim::Matrix2<double> half = qsim::Matrix2<double>::Identity() * 0.5;
    worst = std::max(worst, (avg - half).cwiseAbs().maxCoeff());
  }
  AuditCheck check;
  check.name = "qotp-mixing";
  check.statistic = worst;
  check.threshold = kExact;
  check.pass = worst < check.threshold;
  check.note = "max |key-average - I/2| over 20 states; pass below threshold";
  return check;
}

// The sender's whole view of an OT is the receiver's request; every request
// must look the same regardless of the choice bit. Three cheap distinguisher
// bits (slot order, leading parity, trailing bit) form one joint contingency
// table against the true choice, so the check is a single chi-square test.
// Sabotage appends the choice bit to the request in the clear.
AuditCheck check_ot_choice(const AuditConfig& cfg) {
  std::mt19937_64 rng(mix_seed(cfg.seed, kTagOt));
  std::vector<std::vector<uint64_t>> table(2, std::vector<uint64_t>(8, 0));
  for (int trial = 0; trial < cfg.trials; ++trial) {
    int b = static_cast<int>(rng() & 1);
    crypto::OtReceiver recv;
    auto request = crypto::ot_begin(recv, 2, b, rng);
    if (cfg.sabotage_ot) request.push_back(static_cast<uint8_t>(b));
    int lex = std::lexicographical_compare(request.begin(), request.begin() + 8,
                                           request.begin() + 8, request.begin() + 16)
                  ? 0
                  : 1;
    unsigned sum = 0;
    for (int k = 0; k < 8; ++k) sum += request[k];
    int cell = (lex << 2) | ((sum & 1) << 1) | (request.back() & 1);
    table[b][cell]++;
  }
  double p = stats::chi2_independence_pvalue(table);
  AuditCheck check;
  check.name = "ot-choice-independence";
  check.statistic = p;
  check.threshold = kAlpha;
  check.pass = p > check.threshold;
  check.note = "chi-square p, choice vs 3 view bits jointly; pass above threshold";
  return check;
}

// A garbled evaluation exposes one signal per wire; its selector bit is the
// wire value XOR a hidden mask, so selectors must be independent of values
// everywhere except the (unmasked) outputs. Sabotage pins the mask shares
// to zero, making the selector the value itself.
AuditCheck check_label_decoupling(const AuditConfig& cfg) {
  gmw::CircuitBuilder builder(2);
  int x0 = builder.input(0);
  int x1 = builder.input(0);
  int x2 = builder.input(1);
  int mid = builder.gate_xor2(x0, x1);
  builder.add_output(builder.gate_and(mid, x2));
  const gmw::BoolCircuit c = builder.finish();
  const bmr::NormCircuit norm = bmr::normalize(c);
  const bmr::GarbleParams params{2, 2};

  std::mt19937_64 rng(mix_seed(cfg.seed, kTagLabels));
  std::vector<std::vector<uint64_t>> internal(2, std::vector<uint64_t>(2, 0));
  std::vector<std::vector<uint64_t>> input(2, std::vector<uint64_t>(2, 0));
  for (int trial = 0; trial < cfg.trials; ++trial) {
    uint8_t v0 = rng() & 1, v1 = rng() & 1, v2 = rng() & 1;
    std::vector<bmr::PartyRandomness> rand;
    for (int party = 0; party < 2; ++party)
      rand.push_back(bmr::PartyRandomness::sample(norm, params.k, rng));
    if (cfg.sabotage_labels) {
      for (auto& r : rand) std::fill(r.lambda_share.begin(), r.lambda_share.end(), 0);
    }
    const auto prog = bmr::garble_dealer(norm, params, rand, {{v0, v1}, {v2}});
    const auto res = bmr::bmr_evaluate(prog);
    internal[v0 ^ v1][res.signals[mid].selector()]++;
    input[v0][res.signals[x0].selector()]++;
  }
  double p = std::min(stats::chi2_independence_pvalue(internal),
                      stats::chi2_independence_pvalue(input));
  AuditCheck check;
  check.name = "label-decoupling";
  check.statistic = p;
  check.threshold = kAlpha;
  check.pass = p > check.threshold;
  check.note = "min chi-square p over 2 wires; pass above threshold";
  return check;
}

// Qubit flipping XOR-shares a flip into every masked wire. The strongest
// colluding view is the pre-flip mask bit plus all shares but one; the
// flipped bit must stay a fair coin inside every such cell. Sabotage pins
// the missing party's share to zero, making the cell deterministic.
AuditCheck check_flip_uniformity(const AuditConfig& cfg) {
  std::mt19937_64 rng(mix_seed(cfg.seed, kTagFlips));
  std::vector<std::vector<uint64_t>> table(8, std::vector<uint64_t>(2, 0));
  for (int trial = 0; trial < cfg.trials; ++trial) {
    uint8_t mask = rng() & 1;
    uint8_t s0 = cfg.sabotage_flips ? 0 : (rng() & 1);
    uint8_t s1 = rng() & 1;
    uint8_t s2 = rng() & 1;
    uint8_t flipped = mask ^ s0 ^ s1 ^ s2;
    int cell = (mask << 2) | (s1 << 1) | s2;
    table[cell][flipped]++;
  }
  double p = stats::chi2_independence_pvalue(table);
  AuditCheck check;
  check.name = "flip-uniformity";
  check.statistic = p;
  check.threshold = kAlpha;
  check.pass = p > check.threshold;
  check.note = "chi-square p, flipped bit vs (mask, n-1 shares); pass above threshold";
  return check;
}

// Bob's whole view of a two-party run: every byte of every message he sends
// or receives. A predictor may pick the single most informative transcript
// bit on a training half; its held-out accuracy against Alice's input bit
// must stay at chance.
AuditCheck check_collusion_transcript(const AuditConfig& cfg) {
  const qsim::QuantumCircuit f{2, {{qsim::Gate::CNOT, 0, 1}}};
  std::mt19937_64 rng(mix_seed(cfg.seed, kTagTranscript));
  const int n = cfg.trials;
  std::vector<uint8_t> secret(n);
  std::vector<std::vector<uint8_t>> view(n);
  size_t min_len = SIZE_MAX;
  for (int t = 0; t < n; ++t) {
    secret[t] = rng() & 1;
    qsim::Register reg(mix_seed(cfg.seed, kTagTranscript + 2 * t + 1));
    auto ha = reg.add_state(StateVec::basis(1, secret[t]));
    auto hb = reg.add_state(StateVec::basis(1, 0));
    const auto res = protocols::run_two_party(reg, f, ha, hb,
                                              mix_seed(cfg.seed, kTagTranscript + 2 * t + 2));
    for (const auto& round : res.transcript.rounds) {
      for (const auto& m : round.messages) {
        if (m.from != 1 && m.to != 1) continue;
        view[t].insert(view[t].end(), m.payload.begin(), m.payload.end());
      }
    }
    min_len = std::min(min_len, view[t].size());
  }

  const size_t bits = std::min<size_t>(min_len * 8, 8192);
  const int train = n / 2;
  auto bit_at = [&](int t, size_t pos) -> int { return (view[t][pos >> 3] >> (pos & 7)) & 1; };

  // Train: best single (position, polarity); evaluate on the held-out half.
  size_t best_pos = 0;
  int best_pol = 0;
  int best_hits = -1;
  for (size_t pos = 0; pos < bits; ++pos) {
    int agree = 0;
    for (int t = 0; t < train; ++t) agree += (bit_at(t, pos) == secret[t]);
    int hits = std::max(agree, train - agree);
    if (hits > best_hits) {
      best_hits = hits;
      best_pos = pos;
      best_pol = (agree >= train - agree) ? 0 : 1;
    }
  }
  int eval_hits = 0;
  for (int t = train; t < n; ++t)
    eval_hits += ((bit_at(t, best_pos) ^ best_pol) == secret[t]);

  AuditCheck check;
  check.name = "collusion-transcript";
  check.statistic = static_cast<double>(eval_hits) / static_cast<double>(n - train);
  check.threshold = accuracy_threshold(n - train);
  check.pass = check.statistic <= check.threshold;
  check.note = "held-out accuracy of best transcript bit; pass at/below threshold";
  return check;
}

// The one quantum channel a party ever sees is a padded qubit. Measuring it
// must predict the payload bit no better than a coin. Sabotage pins the pad
// to the identity key, so the measurement reads the payload directly.
AuditCheck check_collusion_channel(const AuditConfig& cfg) {
  std::mt19937_64 rng(mix_seed(cfg.seed, kTagChannel));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int hits = 0;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    int v = static_cast<int>(rng() & 1);
    uint8_t a = cfg.sabotage_qotp ? 0 : (rng() & 1);
    uint8_t b = cfg.sabotage_qotp ? 0 : (rng() & 1);
    StateVec s = StateVec::basis(1, v);
    qsim::QotpKey key;
    key.pairs = {{a, b}};
    qotp_encrypt(s, key);
    double p_one = std::norm(s.amp(1));
    int guess = unit(rng) < p_one ? 1 : 0;
    hits += (guess == v);
  }
  AuditCheck check;
  check.name = "collusion-channel";
  check.statistic = static_cast<double>(hits) / static_cast<double>(cfg.trials);
  check.threshold = accuracy_threshold(cfg.trials);
  check.pass = check.statistic <= check.threshold;
  check.note = "accuracy of measuring the padded qubit; pass at/below threshold";
  return check;
}

}  // namespace

AuditReport privacy_audit(const AuditConfig& config) {
  if (config.trials < 1000) throw std::invalid_argument("audit needs trials >= 1000");
  AuditReport report;
  report.checks.push_back(check_qotp_mixing(config));
  report.checks.push_back(check_ot_choice(config));
  report.checks.push_back(check_label_decoupling(config));
  report.checks.push_back(check_flip_uniformity(config));
  report.checks.push_back(check_collusion_transcript(config));
  report.checks.push_back(check_collusion_channel(config));
  return report;
}

bool AuditReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const AuditCheck& c) { return c.pass; });
}

std::string AuditReport::render() const {
  std::ostringstream out;
  int passed = 0;
  for (const AuditCheck& c : checks) {
    passed += c.pass;
    out << (c.pass ? "PASS " : "FAIL ") << std::left << std::setw(24) << c.name
        << std::right << "  statistic=" << std::scientific << std::setprecision(3)
        << c.statistic << "  threshold=" << c.threshold << "  (" << c.note << ")\n";
  }
  out << "privacy audit: " << passed << "/" << checks.size() << " checks passed\n";
  return out.str();
}

}  // namespace mpqc::harness
