// core/svkit/stats/ks.cc

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

#include "svkit/stats/ks.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "svkit/base/error.h"

namespace svkit {

double NormalCdfPhi(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double KsStatistic(std::span<const double> sample, double mean, double sd) {
  if (sample.empty()) throw ArgumentError("empty sample");
  if (sd <= 0) throw DegenerateSampleError("reference sd must be positive");
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (size_t i = 0; i < sorted.size(); ++i) {
    double phi = NormalCdfPhi((sorted[i] - mean) / sd);
    double upper = (static_cast<double>(i) + 1.0) / n - phi;
    double lower = phi - static_cast<double>(i) / n;
    d = std::max({d, upper, lower});
  }
  return d;
}

double KolmogorovAsymptoticPValue(double lambda) {
  if (lambda <= 1e-3) return 1.0;  // the alternating series is useless this low
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1 ? term : -term);
    if (term < 1e-16) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

TestResult KsNormality(std::span<const double> sample) {
  if (sample.empty()) throw ArgumentError("empty sample");
  for (double x : sample)
    if (!std::isfinite(x)) throw ArgumentError("sample contains non-finite values");

  const double n = static_cast<double>(sample.size());
  double mean = 0.0;
  for (double x : sample) mean += x;
  mean /= n;
  double ss = 0.0;
  for (double x : sample) ss += (x - mean) * (x - mean);
  if (sample.size() < 2 || ss == 0.0)
    throw DegenerateSampleError("sample has zero spread; normality test undefined");
  const double sd = std::sqrt(ss / (n - 1.0));

  TestResult result;
  result.statistic = KsStatistic(sample, mean, sd);
  result.p_value = KolmogorovAsymptoticPValue(std::sqrt(n) * result.statistic);
  result.method = TestMethod::kNormalApprox;
  return result;
}

}  // namespace svkit
