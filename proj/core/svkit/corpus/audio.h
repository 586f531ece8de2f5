// core/svkit/corpus/audio.h

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

#ifndef SVKIT_CORPUS_AUDIO_H_
#define SVKIT_CORPUS_AUDIO_H_

#include <vector>

namespace svkit {

/// Mono audio at a known sample rate. Samples are normalized amplitudes in
/// [-1, 1]; 16-bit PCM maps through division by 32768.
struct AudioSignal {
  std::vector<double> samples;
  int sample_rate_hz = 0;
};

/// Throws ArgumentError if the signal violates its invariants (empty, bad
/// rate, non-finite or out-of-range samples).
void ValidateAudio(const AudioSignal& signal);

/// Linear-interpolation resampler with edge hold. Output length is
/// floor(len * target / source); equal rates return the input unchanged.
AudioSignal Resample(const AudioSignal& signal, int target_rate_hz);

}  // namespace svkit

#endif  // SVKIT_CORPUS_AUDIO_H_
