// core/svkit/stats/wilcoxon.cc

// Copyright 2026  The svkit authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "svkit/stats/wilcoxon.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "svkit/base/error.h"

namespace svkit {

namespace {

double NormalCdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// Average ranks of |d|, doubled so ties stay integral.
std::vector<int64_t> DoubledRanks(const std::vector<double>& abs_d) {
  const size_t n = abs_d.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(),
            [&abs_d](size_t i, size_t j) { return abs_d[i] < abs_d[j]; });

  std::vector<int64_t> doubled(n, 0);
  size_t i = 0;
  while (i < n) {
    size_t j = i;
    while (j < n && abs_d[order[j]] == abs_d[order[i]]) ++j;
    // Ranks i+1 .. j averaged; doubled value 2*avg = (i+1) + j.
    int64_t doubled_rank = static_cast<int64_t>(i + 1) + static_cast<int64_t>(j);
    for (size_t k = i; k < j; ++k) doubled[order[k]] = doubled_rank;
    i = j;
  }
  return doubled;
}

// P(2*W+ <= target) under the null, by the exact rank-sum distribution.
double ExactLowerTail(const std::vector<int64_t>& doubled_ranks, int64_t target) {
  int64_t total = 0;
  for (int64_t r : doubled_ranks) total += r;
  // counts[s] = number of sign assignments with doubled rank sum s.
  std::vector<double> counts(static_cast<size_t>(total) + 1, 0.0);
  counts[0] = 1.0;
  int64_t reach = 0;
  for (int64_t r : doubled_ranks) {
    reach += r;
    for (int64_t s = reach; s >= r; --s) counts[s] += counts[s - r];
  }
  double below = 0.0, all = 0.0;
  for (int64_t s = 0; s <= total; ++s) {
    all += counts[s];
    if (s <= target) below += counts[s];
  }
  return below / all;
}

}  // namespace

const std::string& TestMethodName(TestMethod method) {
  static const std::string kExactName = "exact";
  static const std::string kNormalName = "normal_approx";
  return method == TestMethod::kExact ? kExactName : kNormalName;
}

TestResult WilcoxonSignedRank(std::span<const double> a, std::span<const double> b) {
  if (a.empty()) throw ArgumentError("empty paired sample");
  if (a.size() != b.size()) throw ArgumentError("paired samples differ in length");
  for (size_t i = 0; i < a.size(); ++i)
    if (!std::isfinite(a[i]) || !std::isfinite(b[i]))
      throw ArgumentError("paired sample contains non-finite values");

  std::vector<double> abs_d;
  std::vector<bool> positive;
  for (size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    if (d == 0.0) continue;
    abs_d.push_back(std::abs(d));
    positive.push_back(d > 0);
  }

  TestResult result;
  if (abs_d.empty()) {
    result.statistic = 0.0;
    result.p_value = 1.0;
    result.method = TestMethod::kExact;
    return result;
  }

  const int n = static_cast<int>(abs_d.size());
  std::vector<int64_t> doubled = DoubledRanks(abs_d);
  int64_t doubled_w_plus = 0, doubled_total = 0;
  for (int i = 0; i < n; ++i) {
    doubled_total += doubled[i];
    if (positive[i]) doubled_w_plus += doubled[i];
  }
  const int64_t doubled_w_minus = doubled_total - doubled_w_plus;
  const int64_t doubled_w = std::min(doubled_w_plus, doubled_w_minus);
  result.statistic = static_cast<double>(doubled_w) / 2.0;

  if (n <= kWilcoxonExactLimit) {
    result.method = TestMethod::kExact;
    result.p_value = std::min(1.0, 2.0 * ExactLowerTail(doubled, doubled_w));
    return result;
  }

  result.method = TestMethod::kNormalApprox;
  const double dn = n;
  const double mean = dn * (dn + 1.0) / 4.0;
  double variance = dn * (dn + 1.0) * (2.0 * dn + 1.0) / 24.0;
  // Tie correction: subtract sum(t^3 - t)/48 per tie group.
  {
    std::vector<double> sorted = abs_d;
    std::sort(sorted.begin(), sorted.end());
    size_t i = 0;
    while (i < sorted.size()) {
      size_t j = i;
      while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
      double t = static_cast<double>(j - i);
      variance -= (t * t * t - t) / 48.0;
      i = j;
    }
  }
  const double w = result.statistic;
  // Continuity correction pulls the statistic half a step toward the mean.
  const double z = (w - mean + 0.5) / std::sqrt(variance);
  result.p_value = std::min(1.0, 2.0 * NormalCdf(z));
  return result;
}

}  // namespace svkit
