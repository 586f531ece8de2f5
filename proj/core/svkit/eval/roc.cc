// core/svkit/eval/roc.cc

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

#include "svkit/eval/roc.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "svkit/base/error.h"

namespace svkit {

namespace {

void SplitScores(const ScoreSet& scores, std::vector<double>* genuine,
                 std::vector<double>* impostor) {
  for (const auto& t : scores.trials) {
    if (!std::isfinite(t.score)) throw ArgumentError("trial score is not finite");
    (t.is_genuine ? genuine : impostor)->push_back(t.score);
  }
  if (genuine->empty() || impostor->empty())
    throw DegenerateSetError("score set needs at least one genuine and one impostor trial");
}

}  // namespace

std::vector<RocPoint> RocPoints(const ScoreSet& scores) {
  std::vector<double> genuine, impostor;
  SplitScores(scores, &genuine, &impostor);
  std::sort(genuine.begin(), genuine.end());
  std::sort(impostor.begin(), impostor.end());

  std::vector<double> thresholds;
  thresholds.push_back(-std::numeric_limits<double>::infinity());
  {
    std::vector<double> all;
    all.reserve(genuine.size() + impostor.size());
    all.insert(all.end(), genuine.begin(), genuine.end());
    all.insert(all.end(), impostor.begin(), impostor.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    thresholds.insert(thresholds.end(), all.begin(), all.end());
  }
  thresholds.push_back(std::numeric_limits<double>::infinity());

  auto accepted_at_or_above = [](const std::vector<double>& sorted, double theta) {
    // count of scores >= theta
    return sorted.end() - std::lower_bound(sorted.begin(), sorted.end(), theta);
  };

  std::vector<RocPoint> points;
  points.reserve(thresholds.size());
  for (double theta : thresholds) {
    RocPoint p;
    p.threshold = theta;
    p.far = static_cast<double>(accepted_at_or_above(impostor, theta)) / impostor.size();
    p.tar = static_cast<double>(accepted_at_or_above(genuine, theta)) / genuine.size();
    points.push_back(p);
  }
  return points;
}

double ComputeEerPercent(const std::vector<RocPoint>& points) {
  if (points.size() < 2) throw DegenerateSetError("ROC curve needs at least two points");
  // Thresholds ascend, so FAR - FRR falls from +1 to -1.
  double prev_diff = points[0].far - (1.0 - points[0].tar);
  for (size_t i = 0; i < points.size(); ++i) {
    double frr = 1.0 - points[i].tar;
    double diff = points[i].far - frr;
    if (diff == 0.0) return points[i].far * 100.0;
    if (diff < 0.0) {
      const RocPoint& a = points[i - 1];
      const RocPoint& b = points[i];
      double frr_a = 1.0 - a.tar;
      double frr_b = 1.0 - b.tar;
      double denom = prev_diff - diff;  // (far_a - frr_a) - (far_b - frr_b) > 0
      double t = prev_diff / denom;
      double eer = a.far + t * (b.far - a.far);
      double eer_frr = frr_a + t * (frr_b - frr_a);
      return 0.5 * (eer + eer_frr) * 100.0;  // equal up to rounding; average for symmetry
    }
    prev_diff = diff;
  }
  throw DegenerateSetError("FAR/FRR curves never cross");
}

double ComputeAuc(const ScoreSet& scores) {
  std::vector<double> genuine, impostor;
  SplitScores(scores, &genuine, &impostor);

  // Mann-Whitney U via average ranks over the pooled scores; exactly the
  // pairwise count of (genuine > impostor) with ties at half weight.
  struct Tagged {
    double score;
    bool genuine;
  };
  std::vector<Tagged> pooled;
  pooled.reserve(genuine.size() + impostor.size());
  for (double s : genuine) pooled.push_back({s, true});
  for (double s : impostor) pooled.push_back({s, false});
  std::sort(pooled.begin(), pooled.end(),
            [](const Tagged& a, const Tagged& b) { return a.score < b.score; });

  double rank_sum_genuine = 0.0;
  size_t i = 0;
  while (i < pooled.size()) {
    size_t j = i;
    while (j < pooled.size() && pooled[j].score == pooled[i].score) ++j;
    double avg_rank = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j));
    for (size_t k = i; k < j; ++k)
      if (pooled[k].genuine) rank_sum_genuine += avg_rank;
    i = j;
  }
  const double ng = static_cast<double>(genuine.size());
  const double ni = static_cast<double>(impostor.size());
  double u = rank_sum_genuine - ng * (ng + 1.0) / 2.0;
  return u / (ng * ni);
}

RocCurve ComputeRoc(const ScoreSet& scores) {
  RocCurve curve;
  curve.points = RocPoints(scores);
  curve.eer_percent = ComputeEerPercent(curve.points);
  curve.auc = ComputeAuc(scores);
  return curve;
}

double PercentageDecrease(double eer_prev, double eer_new) {
  if (eer_prev <= 0) throw ArgumentError("previous EER must be positive");
  return (eer_prev - eer_new) / eer_prev * 100.0;
}

}  // namespace svkit
