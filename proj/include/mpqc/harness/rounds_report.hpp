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

#ifndef MPQC_HARNESS_ROUNDS_REPORT_HPP_
#define MPQC_HARNESS_ROUNDS_REPORT_HPP_

#include <string>
#include <vector>

namespace mpqc::harness {

// One measured point of a depth sweep: a circuit-family instance at `depth`
// finished in `rounds` message-bearing rounds.
struct RoundsRow {
  int depth = 0;
  int rounds = 0;
};

// Verdict over a sweep. A constant-round protocol reports the same count at
// every depth; anything that tracks depth is flagged.
struct RoundsReport {
  std::vector<RoundsRow> rows;  // sorted by depth
  bool constant = false;        // every row agrees with the first

  // Fixed-width table followed by one PASS/FAIL line.
  std::string render() const;
};

// Builds the verdict from measured rows. Throws std::invalid_argument
// ("need >= 2 depths") when the sweep is too short to distinguish a constant
// count from a growing one, and on duplicate depths.
RoundsReport rounds_report(std::vector<RoundsRow> rows);

}  // namespace mpqc::harness

#endif  // MPQC_HARNESS_ROUNDS_REPORT_HPP_
