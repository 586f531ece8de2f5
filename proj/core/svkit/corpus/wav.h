// core/svkit/corpus/wav.h

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

#ifndef SVKIT_CORPUS_WAV_H_
#define SVKIT_CORPUS_WAV_H_

#include <filesystem>

#include "svkit/corpus/audio.h"

namespace svkit {

/// Reads a RIFF/WAVE file containing 16-bit signed little-endian PCM.
/// Stereo is averaged to mono; integer amplitudes are divided by 32768.
/// Throws FormatError on a broken container, UnsupportedFormatError on
/// non-PCM data or bit depths other than 16, EmptyAudioError on a
/// zero-length data chunk.
AudioSignal ReadWav(const std::filesystem::path& path);

/// Writes mono 16-bit PCM. Samples are rounded to the nearest integer step
/// and clamped, so ReadWav(WriteWav(x)) == quantized x exactly.
void WriteWav(const std::filesystem::path& path, const AudioSignal& signal);

}  // namespace svkit

#endif  // SVKIT_CORPUS_WAV_H_
