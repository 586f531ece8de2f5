// core/svkit/feat/mfcc.h

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

#ifndef SVKIT_FEAT_MFCC_H_
#define SVKIT_FEAT_MFCC_H_

#include <string>

#include "svkit/base/matrix.h"
#include "svkit/corpus/audio.h"
#include "svkit/feat/frame.h"

namespace svkit {

/// Mel scale: m = 2595 * log10(1 + f/700). Strictly increasing, mel(0) = 0.
double HzToMel(double f);
double MelToHz(double m);

/// Triangular filterbank with band edges equally spaced on the mel scale
/// between 0 Hz and Nyquist. Shape: n_filters x (fft_size/2 + 1).
Matrix MelFilterbank(int n_filters, int fft_size, int sample_rate_hz);

/// Orthonormal type-II DCT matrix, n_out x n_in rows of cosine bases.
Matrix DctMatrix(int n_out, int n_in);

/// Per-utterance feature matrix, frames by coefficient dimension.
struct FeatureMatrix {
  Matrix values;
  std::string utterance_id;

  int NumFrames() const { return values.NumRows(); }
  int Dim() const { return values.NumCols(); }
};

/// Static MFCCs: pre-emphasis + framing + Hamming -> magnitude spectrum ->
/// mel filterbank -> log (energies floored at 1e-10) -> orthonormal DCT-II,
/// keeping the first n_cepstra coefficients.
FeatureMatrix ComputeMfcc(const AudioSignal& signal, const FrameConfig& cfg,
                          std::string utterance_id = "");

/// Full recipe: static MFCCs plus deltas per the config flags.
FeatureMatrix ExtractFeatures(const AudioSignal& signal, const FrameConfig& cfg,
                              std::string utterance_id = "");

constexpr double kLogEnergyFloor = 1e-10;

}  // namespace svkit

#endif  // SVKIT_FEAT_MFCC_H_
