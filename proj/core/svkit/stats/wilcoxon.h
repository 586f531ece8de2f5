// core/svkit/stats/wilcoxon.h

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

#ifndef SVKIT_STATS_WILCOXON_H_
#define SVKIT_STATS_WILCOXON_H_

#include <span>
#include <string>

namespace svkit {

enum class TestMethod { kExact, kNormalApprox };

const std::string& TestMethodName(TestMethod method);

struct TestResult {
  double statistic = 0.0;
  double p_value = 1.0;
  TestMethod method = TestMethod::kExact;
};

/// Two-sided paired Wilcoxon signed-rank test.
///
/// Differences a - b; zeros dropped; |d| ranked with average ranks on ties;
/// statistic W = min(W+, W-). The p-value is exact (full sign-assignment
/// distribution) up to n = 25 remaining pairs, then a normal approximation
/// with tie and continuity corrections. All-zero differences give p = 1.
/// Throws ArgumentError on empty or unequal-length samples.
TestResult WilcoxonSignedRank(std::span<const double> a, std::span<const double> b);

/// Exact-p crossover; 2^25 sign assignments is still cheap via the rank-sum
/// distribution recurrence.
constexpr int kWilcoxonExactLimit = 25;

}  // namespace svkit

#endif  // SVKIT_STATS_WILCOXON_H_
