// core/svkit/feat/fft.h

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

#ifndef SVKIT_FEAT_FFT_H_
#define SVKIT_FEAT_FFT_H_

#include <complex>
#include <span>
#include <vector>

namespace svkit {

/// In-place iterative radix-2 FFT. Size must be a power of two.
void Fft(std::vector<std::complex<double>>& a);

/// |DFT| of a real frame zero-padded to fft_size, bins 0..fft_size/2.
std::vector<double> MagnitudeSpectrum(std::span<const double> frame, int fft_size);

}  // namespace svkit

#endif  // SVKIT_FEAT_FFT_H_
