// core/svkit/corpus/wav.cc

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

#include "svkit/corpus/wav.h"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "svkit/base/error.h"

namespace svkit {

namespace {

constexpr uint16_t kFormatPcm = 1;

uint16_t ReadU16(const uint8_t* p) { return static_cast<uint16_t>(p[0] | (p[1] << 8)); }
uint32_t ReadU32(const uint8_t* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

void PutU16(std::vector<uint8_t>& out, uint16_t v) {
  out.push_back(static_cast<uint8_t>(v & 0xff));
  out.push_back(static_cast<uint8_t>(v >> 8));
}
void PutU32(std::vector<uint8_t>& out, uint32_t v) {
  out.push_back(static_cast<uint8_t>(v & 0xff));
  out.push_back(static_cast<uint8_t>((v >> 8) & 0xff));
  out.push_back(static_cast<uint8_t>((v >> 16) & 0xff));
  out.push_back(static_cast<uint8_t>((v >> 24) & 0xff));
}

}  // namespace

AudioSignal ReadWav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());

  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0)
    throw FormatError(path.string() + ": missing RIFF header");
  if (std::memcmp(bytes.data() + 8, "WAVE", 4) != 0)
    throw FormatError(path.string() + ": not a WAVE container");

  uint16_t audio_format = 0, channels = 0, bits_per_sample = 0;
  uint32_t sample_rate = 0;
  bool have_fmt = false;
  const uint8_t* data = nullptr;
  uint32_t data_size = 0;
  bool have_data = false;

  size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const uint8_t* chunk = bytes.data() + pos;
    uint32_t chunk_size = ReadU32(chunk + 4);
    size_t body = pos + 8;
    if (body + chunk_size > bytes.size())
      throw FormatError(path.string() + ": truncated chunk");
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (chunk_size < 16) throw FormatError(path.string() + ": short fmt chunk");
      const uint8_t* f = bytes.data() + body;
      audio_format = ReadU16(f);
      channels = ReadU16(f + 2);
      sample_rate = ReadU32(f + 4);
      bits_per_sample = ReadU16(f + 14);
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      data = bytes.data() + body;
      data_size = chunk_size;
      have_data = true;
    }
    // Chunks are word-aligned; odd sizes carry a pad byte.
    pos = body + chunk_size + (chunk_size & 1);
  }

  if (!have_fmt) throw FormatError(path.string() + ": no fmt chunk");
  if (!have_data) throw FormatError(path.string() + ": no data chunk");
  if (audio_format != kFormatPcm)
    throw UnsupportedFormatError(path.string() + ": only linear PCM is supported");
  if (bits_per_sample != 16)
    throw UnsupportedFormatError(path.string() + ": only 16-bit samples are supported");
  if (channels != 1 && channels != 2)
    throw UnsupportedFormatError(path.string() + ": only mono or stereo is supported");
  if (sample_rate == 0) throw FormatError(path.string() + ": zero sample rate");
  if (data_size == 0) throw EmptyAudioError(path.string() + ": empty data chunk");

  const size_t bytes_per_frame = 2u * channels;
  const size_t n_frames = data_size / bytes_per_frame;
  if (n_frames == 0) throw EmptyAudioError(path.string() + ": data chunk shorter than one frame");

  AudioSignal out;
  out.sample_rate_hz = static_cast<int>(sample_rate);
  out.samples.resize(n_frames);
  for (size_t i = 0; i < n_frames; ++i) {
    double acc = 0.0;
    for (uint16_t c = 0; c < channels; ++c) {
      int16_t s = static_cast<int16_t>(ReadU16(data + i * bytes_per_frame + 2 * c));
      acc += static_cast<double>(s) / 32768.0;
    }
    out.samples[i] = acc / channels;
  }
  return out;
}

void WriteWav(const std::filesystem::path& path, const AudioSignal& signal) {
  ValidateAudio(signal);
  const uint32_t n = static_cast<uint32_t>(signal.samples.size());
  const uint32_t data_size = n * 2;

  std::vector<uint8_t> out;
  out.reserve(44 + data_size);
  out.insert(out.end(), {'R', 'I', 'F', 'F'});
  PutU32(out, 36 + data_size);
  out.insert(out.end(), {'W', 'A', 'V', 'E'});
  out.insert(out.end(), {'f', 'm', 't', ' '});
  PutU32(out, 16);
  PutU16(out, kFormatPcm);
  PutU16(out, 1);  // mono
  PutU32(out, static_cast<uint32_t>(signal.sample_rate_hz));
  PutU32(out, static_cast<uint32_t>(signal.sample_rate_hz) * 2);
  PutU16(out, 2);   // block align
  PutU16(out, 16);  // bits per sample
  out.insert(out.end(), {'d', 'a', 't', 'a'});
  PutU32(out, data_size);
  for (double s : signal.samples) {
    double q = std::round(s * 32768.0);
    if (q > 32767.0) q = 32767.0;
    if (q < -32768.0) q = -32768.0;
    PutU16(out, static_cast<uint16_t>(static_cast<int16_t>(q)));
  }

  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path.string());
  f.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
  if (!f) throw IoError("write failed for " + path.string());
}

}  // namespace svkit
