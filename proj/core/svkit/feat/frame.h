// core/svkit/feat/frame.h

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

#ifndef SVKIT_FEAT_FRAME_H_
#define SVKIT_FEAT_FRAME_H_

#include <span>
#include <vector>

#include "svkit/base/matrix.h"
#include "svkit/corpus/audio.h"

namespace svkit {

/// Feature extraction recipe. Defaults: 20 ms frames with 31.25% overlap,
/// 0.97 pre-emphasis, 26 mel filters, 16 cepstra, no deltas.
struct FrameConfig {
  double frame_ms = 20.0;
  double overlap_fraction = 0.3125;
  double preemphasis_alpha = 0.97;
  int n_mel_filters = 26;
  int n_cepstra = 16;
  int fft_size = 0;  // 0 = smallest power of two >= frame length
  bool include_delta = false;
  bool include_delta_delta = false;
  int delta_window = 2;
};

/// Throws ArgumentError on out-of-range fields.
void ValidateFrameConfig(const FrameConfig& cfg);

int FrameLengthSamples(const FrameConfig& cfg, int sample_rate_hz);
int FrameHop(int frame_len, double overlap_fraction);
int ResolveFftSize(const FrameConfig& cfg, int frame_len);

/// Number of frames for a signal of `n_samples`: floor((L - len)/hop) + 1.
int FrameCount(int n_samples, int frame_len, int hop);

/// y[0] = x[0]; y[t] = x[t] - alpha * x[t-1].
std::vector<double> Preemphasize(std::span<const double> samples, double alpha);

/// Slices into overlapping frames; no window applied.
Matrix FrameSignal(std::span<const double> samples, int frame_len, int hop);

std::vector<double> HammingWindow(int length);

/// Pre-emphasis, framing, and Hamming windowing in one step.
/// Throws TooShortError if the signal is shorter than one frame.
Matrix PreemphasizeAndFrame(const AudioSignal& signal, const FrameConfig& cfg);

}  // namespace svkit

#endif  // SVKIT_FEAT_FRAME_H_
