// core/svkit/eval/roc.h

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

#ifndef SVKIT_EVAL_ROC_H_
#define SVKIT_EVAL_ROC_H_

#include <string>
#include <vector>

#include "svkit/corpus/manifest.h"

namespace svkit {

struct TrialScore {
  double score = 0.0;
  bool is_genuine = false;
  Condition condition = Condition::kNeutral;
  std::string claimed_speaker;
};

struct ScoreSet {
  std::vector<TrialScore> trials;
};

struct RocPoint {
  double threshold = 0.0;
  double far = 0.0;  // accepted impostors / impostors
  double tar = 0.0;  // accepted genuines / genuines
};

struct RocCurve {
  std::vector<RocPoint> points;
  double eer_percent = 0.0;
  double auc = 0.0;
};

/// Threshold sweep over the sorted unique scores plus -inf/+inf sentinels;
/// a trial is accepted iff score >= threshold. Throws DegenerateSetError
/// when either trial class is missing, ArgumentError on non-finite scores.
std::vector<RocPoint> RocPoints(const ScoreSet& scores);

/// Equal error rate in percent: the FAR = FRR operating point, linearly
/// interpolated between the adjacent sweep points where FAR - FRR changes
/// sign.
double ComputeEerPercent(const std::vector<RocPoint>& points);

/// P(genuine score > impostor score) + 0.5 * P(tie), computed via rank sums;
/// identical to the all-pairs comparison.
double ComputeAuc(const ScoreSet& scores);

RocCurve ComputeRoc(const ScoreSet& scores);

/// (eer_prev - eer_new) / eer_prev * 100. Throws ArgumentError if
/// eer_prev <= 0.
double PercentageDecrease(double eer_prev, double eer_new);

}  // namespace svkit

#endif  // SVKIT_EVAL_ROC_H_
