// core/svkit/stats/ks.h

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

#ifndef SVKIT_STATS_KS_H_
#define SVKIT_STATS_KS_H_

#include <span>

#include "svkit/stats/wilcoxon.h"

namespace svkit {

/// One-sample KS statistic D against N(mean, sd^2), evaluated at the order
/// statistics: max over i of max(i/n - Phi(z_i), Phi(z_i) - (i-1)/n).
double KsStatistic(std::span<const double> sample, double mean, double sd);

/// Normality check with the reference parameters estimated from the sample
/// (Lilliefors-style, so the p-value is approximate). p comes from the
/// asymptotic Kolmogorov distribution at lambda = sqrt(n) * D.
/// Throws DegenerateSampleError when the sample has zero spread.
TestResult KsNormality(std::span<const double> sample);

/// Q(lambda) = 2 * sum_{k>=1} (-1)^{k-1} exp(-2 k^2 lambda^2), clamped to [0, 1].
double KolmogorovAsymptoticPValue(double lambda);

double NormalCdfPhi(double z);

}  // namespace svkit

#endif  // SVKIT_STATS_KS_H_
