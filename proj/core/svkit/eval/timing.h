// core/svkit/eval/timing.h

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

#ifndef SVKIT_EVAL_TIMING_H_
#define SVKIT_EVAL_TIMING_H_

#include <chrono>
#include <string>
#include <utility>

namespace svkit {

enum class Phase { kTrain, kTest };

const std::string& PhaseName(Phase phase);

/// One wall-clock measurement. Values are reported, never asserted; timing
/// is environment-dependent by nature.
struct TimingReport {
  Phase phase = Phase::kTrain;
  std::string variant;
  std::string dataset;
  double elapsed_seconds = 0.0;
};

/// Runs `action` and returns the monotonic wall-clock duration around it.
template <class Action>
TimingReport MeasureTime(Phase phase, std::string variant, std::string dataset,
                         Action&& action) {
  const auto start = std::chrono::steady_clock::now();
  std::forward<Action>(action)();
  const auto stop = std::chrono::steady_clock::now();
  TimingReport report;
  report.phase = phase;
  report.variant = std::move(variant);
  report.dataset = std::move(dataset);
  report.elapsed_seconds = std::chrono::duration<double>(stop - start).count();
  return report;
}

}  // namespace svkit

#endif  // SVKIT_EVAL_TIMING_H_
