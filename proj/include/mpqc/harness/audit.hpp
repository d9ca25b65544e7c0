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

#ifndef MPQC_HARNESS_AUDIT_HPP_
#define MPQC_HARNESS_AUDIT_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace mpqc::harness {

// Statistical privacy audit. Each check replays one hiding mechanism many
// times and tests that what an adversary sees is independent of what it must
// not learn. The sabotage switches exist to prove the checks have teeth:
// each one pins or leaks exactly the secret its check guards, and the audit
// must then fail that check (and only via that mechanism).
struct AuditConfig {
  int trials = 10000;  // samples per statistical check; must be >= 1000
  uint64_t seed = 1;   // sole randomness source; same seed, same report

  bool sabotage_qotp = false;    // pad keys pinned to (0,0)
  bool sabotage_ot = false;      // receiver request leaks the choice bit
  bool sabotage_labels = false;  // mask shares pinned to zero
  bool sabotage_flips = false;   // one party's flip share pinned to zero
};

// One check's outcome. `statistic` and `threshold` mean what `note` says:
// a p-value that must stay above the threshold, a deviation that must stay
// below it, or a predictor accuracy that must stay below it.
struct AuditCheck {
  std::string name;
  bool pass = false;
  double statistic = 0.0;
  double threshold = 0.0;
  std::string note;
};

struct AuditReport {
  std::vector<AuditCheck> checks;

  bool all_pass() const;

  // One line per check plus a summary line.
  std::string render() const;
};

// Runs the full battery:
//   qotp-mixing            four-key pad average equals I/2 (max deviation)
//   ot-choice-independence sender's view vs choice bit (chi-square p-value)
//   label-decoupling       signal selectors vs wire values (chi-square p-value)
//   flip-uniformity        flipped mask given n-1 shares (chi-square p-value)
//   collusion-transcript   held-out bit predictor on transcripts (accuracy)
//   collusion-channel      measuring a padded qubit (accuracy)
// Throws std::invalid_argument when config.trials < 1000.
AuditReport privacy_audit(const AuditConfig& config);

}  // namespace mpqc::harness

#endif  // MPQC_HARNESS_AUDIT_HPP_
