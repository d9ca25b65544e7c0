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

#ifndef MPQC_HARNESS_STATS_HPP_
#define MPQC_HARNESS_STATS_HPP_

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mpqc::stats {

namespace detail {

// Regularized lower incomplete gamma P(a, x) by series expansion (x < a+1).
inline double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int n = 0; n < 500; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-15) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Regularized upper incomplete gamma Q(a, x) by continued fraction (x >= a+1).
inline double gamma_q_cf(double a, double x) {
  const double kTiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 500; ++i) {
    double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-15) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace detail

// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
inline double gamma_q(double a, double x) {
  if (a <= 0.0 || x < 0.0) throw std::invalid_argument("gamma_q domain");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - detail::gamma_p_series(a, x);
  return detail::gamma_q_cf(a, x);
}

// Survival function of the chi-squared distribution: the p-value of an
// observed statistic with the given degrees of freedom.
inline double chi2_pvalue(double statistic, int dof) {
  if (dof <= 0) throw std::invalid_argument("dof must be positive");
  return gamma_q(dof / 2.0, statistic / 2.0);
}

// Goodness-of-fit p-value for observed counts against uniform expectation.
inline double chi2_uniform_pvalue(const std::vector<uint64_t>& counts) {
  if (counts.size() < 2) throw std::invalid_argument("need at least two cells");
  uint64_t total = 0;
  for (uint64_t c : counts) total += c;
  if (total == 0) throw std::invalid_argument("empty sample");
  double expected = static_cast<double>(total) / counts.size();
  double stat = 0.0;
  for (uint64_t c : counts) {
    double d = static_cast<double>(c) - expected;
    stat += d * d / expected;
  }
  return chi2_pvalue(stat, static_cast<int>(counts.size()) - 1);
}

// Independence test on an r x c contingency table (row-major).
inline double chi2_independence_pvalue(const std::vector<std::vector<uint64_t>>& table) {
  size_t rows = table.size();
  if (rows < 2) throw std::invalid_argument("need at least two rows");
  size_t cols = table[0].size();
  if (cols < 2) throw std::invalid_argument("need at least two columns");
  std::vector<double> row_sum(rows, 0), col_sum(cols, 0);
  double total = 0;
  for (size_t r = 0; r < rows; ++r) {
    if (table[r].size() != cols) throw std::invalid_argument("ragged table");
    for (size_t c = 0; c < cols; ++c) {
      row_sum[r] += static_cast<double>(table[r][c]);
      col_sum[c] += static_cast<double>(table[r][c]);
      total += static_cast<double>(table[r][c]);
    }
  }
  if (total == 0) throw std::invalid_argument("empty table");
  double stat = 0.0;
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; ++c) {
      double expected = row_sum[r] * col_sum[c] / total;
      if (expected <= 0) continue;
      double d = static_cast<double>(table[r][c]) - expected;
      stat += d * d / expected;
    }
  }
  int dof = static_cast<int>((rows - 1) * (cols - 1));
  return chi2_pvalue(stat, dof);
}

}  // namespace mpqc::stats

#endif  // MPQC_HARNESS_STATS_HPP_
