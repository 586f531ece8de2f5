// core/svkit/feat/delta.cc

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

#include "svkit/feat/delta.h"

#include <algorithm>

#include "svkit/base/error.h"
#include "svkit/feat/mfcc.h"

namespace svkit {

Matrix ComputeDeltas(const Matrix& features, int window) {
  if (window < 1) throw ArgumentError("delta window must be >= 1");
  const int T = features.NumRows();
  const int D = features.NumCols();
  double denom = 0.0;
  for (int n = 1; n <= window; ++n) denom += static_cast<double>(n) * n;
  denom *= 2.0;

  Matrix deltas(T, D);
  auto clamp_t = [T](int t) { return std::clamp(t, 0, T - 1); };
  for (int t = 0; t < T; ++t) {
    for (int d = 0; d < D; ++d) {
      double num = 0.0;
      for (int n = 1; n <= window; ++n)
        num += n * (features(clamp_t(t + n), d) - features(clamp_t(t - n), d));
      deltas(t, d) = num / denom;
    }
  }
  return deltas;
}

FeatureMatrix AppendDeltas(const FeatureMatrix& features, const FrameConfig& cfg) {
  const int T = features.NumFrames();
  const int D = features.Dim();
  if (T <= 2 * cfg.delta_window)
    throw TooShortError("need more than " + std::to_string(2 * cfg.delta_window) +
                        " frames for deltas, got " + std::to_string(T));

  const int n_tracks = 1 + (cfg.include_delta ? 1 : 0) + (cfg.include_delta_delta ? 1 : 0);
  FeatureMatrix out;
  out.utterance_id = features.utterance_id;
  out.values = Matrix(T, D * n_tracks);
  for (int t = 0; t < T; ++t)
    for (int d = 0; d < D; ++d) out.values(t, d) = features.values(t, d);

  int col = D;
  Matrix delta;
  if (cfg.include_delta || cfg.include_delta_delta)
    delta = ComputeDeltas(features.values, cfg.delta_window);
  if (cfg.include_delta) {
    for (int t = 0; t < T; ++t)
      for (int d = 0; d < D; ++d) out.values(t, col + d) = delta(t, d);
    col += D;
  }
  if (cfg.include_delta_delta) {
    Matrix dd = ComputeDeltas(delta, cfg.delta_window);
    for (int t = 0; t < T; ++t)
      for (int d = 0; d < D; ++d) out.values(t, col + d) = dd(t, d);
  }
  return out;
}

}  // namespace svkit
