// core/svkit/feat/mfcc.cc

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

#include "svkit/feat/mfcc.h"

#include <cmath>
#include <numbers>

#include "svkit/base/error.h"
#include "svkit/feat/delta.h"
#include "svkit/feat/fft.h"

namespace svkit {

double HzToMel(double f) {
  if (f < 0) throw ArgumentError("frequency must be nonnegative");
  return 2595.0 * std::log10(1.0 + f / 700.0);
}

double MelToHz(double m) {
  if (m < 0) throw ArgumentError("mel value must be nonnegative");
  return 700.0 * (std::pow(10.0, m / 2595.0) - 1.0);
}

Matrix MelFilterbank(int n_filters, int fft_size, int sample_rate_hz) {
  if (n_filters < 1) throw ArgumentError("need at least one mel filter");
  const int n_bins = fft_size / 2 + 1;
  const double nyquist = sample_rate_hz / 2.0;

  // n_filters + 2 edges, equally spaced in mel between 0 and Nyquist.
  std::vector<double> edges_hz(n_filters + 2);
  const double mel_max = HzToMel(nyquist);
  for (int i = 0; i < n_filters + 2; ++i)
    edges_hz[i] = MelToHz(mel_max * i / (n_filters + 1));

  Matrix fb(n_filters, n_bins);
  for (int j = 0; j < n_filters; ++j) {
    const double left = edges_hz[j], center = edges_hz[j + 1], right = edges_hz[j + 2];
    for (int k = 0; k < n_bins; ++k) {
      const double f = static_cast<double>(k) * sample_rate_hz / fft_size;
      double w = 0.0;
      if (f > left && f < center)
        w = (f - left) / (center - left);
      else if (f == center)
        w = 1.0;
      else if (f > center && f < right)
        w = (right - f) / (right - center);
      fb(j, k) = w;
    }
  }
  return fb;
}

Matrix DctMatrix(int n_out, int n_in) {
  if (n_out < 1 || n_out > n_in) throw ArgumentError("DCT output size must be in [1, n_in]");
  Matrix dct(n_out, n_in);
  const double norm0 = std::sqrt(1.0 / n_in);
  const double norm = std::sqrt(2.0 / n_in);
  for (int i = 0; i < n_out; ++i)
    for (int m = 0; m < n_in; ++m)
      dct(i, m) = (i == 0 ? norm0 : norm) *
                  std::cos(std::numbers::pi * i * (m + 0.5) / n_in);
  return dct;
}

FeatureMatrix ComputeMfcc(const AudioSignal& signal, const FrameConfig& cfg,
                          std::string utterance_id) {
  Matrix frames = PreemphasizeAndFrame(signal, cfg);
  const int frame_len = frames.NumCols();
  const int fft_size = ResolveFftSize(cfg, frame_len);
  const Matrix fb = MelFilterbank(cfg.n_mel_filters, fft_size, signal.sample_rate_hz);
  const Matrix dct = DctMatrix(cfg.n_cepstra, cfg.n_mel_filters);
  const int n_bins = fft_size / 2 + 1;

  FeatureMatrix out;
  out.utterance_id = std::move(utterance_id);
  out.values = Matrix(frames.NumRows(), cfg.n_cepstra);
  std::vector<double> log_energies(cfg.n_mel_filters);
  for (int t = 0; t < frames.NumRows(); ++t) {
    std::vector<double> mags = MagnitudeSpectrum(frames.Row(t), fft_size);
    for (int j = 0; j < cfg.n_mel_filters; ++j) {
      double e = 0.0;
      for (int k = 0; k < n_bins; ++k) e += fb(j, k) * mags[k];
      log_energies[j] = std::log(e < kLogEnergyFloor ? kLogEnergyFloor : e);
    }
    for (int i = 0; i < cfg.n_cepstra; ++i) {
      double c = 0.0;
      for (int j = 0; j < cfg.n_mel_filters; ++j) c += dct(i, j) * log_energies[j];
      out.values(t, i) = c;
    }
  }
  return out;
}

FeatureMatrix ExtractFeatures(const AudioSignal& signal, const FrameConfig& cfg,
                              std::string utterance_id) {
  FeatureMatrix mfcc = ComputeMfcc(signal, cfg, std::move(utterance_id));
  if (!cfg.include_delta && !cfg.include_delta_delta) return mfcc;
  return AppendDeltas(mfcc, cfg);
}

}  // namespace svkit
