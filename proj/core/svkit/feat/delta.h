// core/svkit/feat/delta.h

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

#ifndef SVKIT_FEAT_DELTA_H_
#define SVKIT_FEAT_DELTA_H_

#include "svkit/base/matrix.h"

namespace svkit {

struct FrameConfig;
struct FeatureMatrix;

/// Regression deltas over a +-window of frames:
///   d_t = sum_n n * (c_{t+n} - c_{t-n}) / (2 * sum_n n^2).
/// Frames past either end are replicated from the boundary, so the output
/// has the same frame count as the input.
Matrix ComputeDeltas(const Matrix& features, int window);

/// Appends delta and/or delta-delta tracks per the config; delta-delta is the
/// delta operator applied to the deltas. Output dim is the base dim times
/// (1 + include_delta + include_delta_delta).
/// Throws TooShortError if the track has <= 2 * delta_window frames.
FeatureMatrix AppendDeltas(const FeatureMatrix& features, const FrameConfig& cfg);

}  // namespace svkit

#endif  // SVKIT_FEAT_DELTA_H_
