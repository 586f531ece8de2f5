// core/svkit/corpus/resample.cc

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

#include <cmath>
#include <cstddef>

#include "svkit/base/error.h"
#include "svkit/base/matrix.h"
#include "svkit/corpus/audio.h"

namespace svkit {

void ValidateAudio(const AudioSignal& signal) {
  if (signal.sample_rate_hz <= 0) throw ArgumentError("sample rate must be positive");
  if (signal.samples.empty()) throw ArgumentError("audio signal is empty");
  for (double s : signal.samples) {
    if (!std::isfinite(s) || s < -1.0 || s > 1.0)
      throw ArgumentError("audio sample outside [-1, 1]");
  }
}

AudioSignal Resample(const AudioSignal& signal, int target_rate_hz) {
  if (target_rate_hz <= 0) throw ArgumentError("target sample rate must be positive");
  ValidateAudio(signal);
  if (target_rate_hz == signal.sample_rate_hz) return signal;

  const std::vector<double>& x = signal.samples;
  const size_t in_len = x.size();
  const size_t out_len = static_cast<size_t>(
      std::floor(static_cast<double>(in_len) * target_rate_hz / signal.sample_rate_hz));

  AudioSignal out;
  out.sample_rate_hz = target_rate_hz;
  out.samples.resize(out_len);
  const double step = static_cast<double>(signal.sample_rate_hz) / target_rate_hz;
  for (size_t i = 0; i < out_len; ++i) {
    double pos = static_cast<double>(i) * step;
    size_t lo = static_cast<size_t>(pos);
    if (lo >= in_len - 1) {
      out.samples[i] = x[in_len - 1];  // edge hold
      continue;
    }
    double frac = pos - static_cast<double>(lo);
    out.samples[i] = x[lo] + frac * (x[lo + 1] - x[lo]);
  }
  return out;
}

}  // namespace svkit
