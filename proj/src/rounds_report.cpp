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

#include "mpqc/harness/rounds_report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace mpqc::harness {

RoundsReport rounds_report(std::vector<RoundsRow> rows) {
  if (rows.size() < 2) throw std::invalid_argument("need >= 2 depths");
  std::sort(rows.begin(), rows.end(),
            [](const RoundsRow& a, const RoundsRow& b) { return a.depth < b.depth; });
  for (size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].depth == rows[i - 1].depth)
      throw std::invalid_argument("duplicate depth in sweep");
  }

  RoundsReport report;
  report.rows = std::move(rows);
  report.constant = std::all_of(
      report.rows.begin(), report.rows.end(),
      [&](const RoundsRow& r) { return r.rounds == report.rows.front().rounds; });
  return report;
}

std::string RoundsReport::render() const {
  std::ostringstream out;
  out << std::setw(8) << "depth" << std::setw(8) << "rounds" << '\n';
  for (const RoundsRow& r : rows)
    out << std::setw(8) << r.depth << std::setw(8) << r.rounds << '\n';
  if (constant) {
    out << "constant rounds: PASS (" << rows.front().rounds << " at every depth)\n";
  } else {
    out << "constant rounds: FAIL (count varies with depth)\n";
  }
  return out.str();
}

}  // namespace mpqc::harness
