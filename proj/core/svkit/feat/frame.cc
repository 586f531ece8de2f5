// core/svkit/feat/frame.cc

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

#include "svkit/feat/frame.h"

#include <cmath>
#include <numbers>

#include "svkit/base/error.h"

namespace svkit {

void ValidateFrameConfig(const FrameConfig& cfg) {
  if (cfg.frame_ms <= 0) throw ArgumentError("frame_ms must be positive");
  if (cfg.overlap_fraction < 0 || cfg.overlap_fraction >= 1)
    throw ArgumentError("overlap_fraction must be in [0, 1)");
  if (cfg.preemphasis_alpha < 0 || cfg.preemphasis_alpha >= 1)
    throw ArgumentError("preemphasis_alpha must be in [0, 1)");
  if (cfg.n_mel_filters < 1) throw ArgumentError("n_mel_filters must be >= 1");
  if (cfg.n_cepstra < 1 || cfg.n_cepstra > cfg.n_mel_filters)
    throw ArgumentError("n_cepstra must be in [1, n_mel_filters]");
  if (cfg.fft_size != 0 && (cfg.fft_size & (cfg.fft_size - 1)) != 0)
    throw ArgumentError("fft_size must be a power of two");
  if (cfg.delta_window < 1) throw ArgumentError("delta_window must be >= 1");
}

int FrameLengthSamples(const FrameConfig& cfg, int sample_rate_hz) {
  if (sample_rate_hz <= 0) throw ArgumentError("sample rate must be positive");
  int len = static_cast<int>(std::lround(cfg.frame_ms / 1000.0 * sample_rate_hz));
  return len < 1 ? 1 : len;
}

int FrameHop(int frame_len, double overlap_fraction) {
  int hop = static_cast<int>(std::lround(frame_len * (1.0 - overlap_fraction)));
  return hop < 1 ? 1 : hop;
}

int ResolveFftSize(const FrameConfig& cfg, int frame_len) {
  if (cfg.fft_size != 0) {
    if (cfg.fft_size < frame_len) throw ArgumentError("fft_size smaller than frame length");
    return cfg.fft_size;
  }
  int n = 1;
  while (n < frame_len) n <<= 1;
  return n;
}

int FrameCount(int n_samples, int frame_len, int hop) {
  if (n_samples < frame_len) return 0;
  return (n_samples - frame_len) / hop + 1;
}

std::vector<double> Preemphasize(std::span<const double> samples, double alpha) {
  std::vector<double> out(samples.size());
  if (samples.empty()) return out;
  out[0] = samples[0];
  for (size_t t = 1; t < samples.size(); ++t) out[t] = samples[t] - alpha * samples[t - 1];
  return out;
}

Matrix FrameSignal(std::span<const double> samples, int frame_len, int hop) {
  if (frame_len < 1 || hop < 1) throw ArgumentError("frame_len and hop must be >= 1");
  int n = FrameCount(static_cast<int>(samples.size()), frame_len, hop);
  if (n == 0)
    throw TooShortError("signal shorter than one frame (" + std::to_string(samples.size()) +
                        " < " + std::to_string(frame_len) + " samples)");
  Matrix frames(n, frame_len);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < frame_len; ++j) frames(i, j) = samples[static_cast<size_t>(i) * hop + j];
  return frames;
}

std::vector<double> HammingWindow(int length) {
  std::vector<double> w(length, 1.0);
  if (length < 2) return w;
  for (int n = 0; n < length; ++n)
    w[n] = 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * n / (length - 1));
  return w;
}

Matrix PreemphasizeAndFrame(const AudioSignal& signal, const FrameConfig& cfg) {
  ValidateFrameConfig(cfg);
  ValidateAudio(signal);
  const int frame_len = FrameLengthSamples(cfg, signal.sample_rate_hz);
  const int hop = FrameHop(frame_len, cfg.overlap_fraction);
  std::vector<double> emphasized = Preemphasize(signal.samples, cfg.preemphasis_alpha);
  Matrix frames = FrameSignal(emphasized, frame_len, hop);
  std::vector<double> window = HammingWindow(frame_len);
  for (int i = 0; i < frames.NumRows(); ++i)
    for (int j = 0; j < frame_len; ++j) frames(i, j) *= window[j];
  return frames;
}

}  // namespace svkit
