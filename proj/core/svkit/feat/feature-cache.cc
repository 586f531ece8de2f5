// core/svkit/feat/feature-cache.cc

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

#include "svkit/feat/feature-cache.h"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "svkit/base/error.h"

namespace svkit {

namespace {

constexpr uint32_t kVersion = 1;

void PutU32(std::vector<uint8_t>& out, uint32_t v) {
  for (int b = 0; b < 4; ++b) out.push_back(static_cast<uint8_t>((v >> (8 * b)) & 0xff));
}

uint32_t GetU32(const uint8_t* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

}  // namespace

void WriteFeatureCache(const std::filesystem::path& path, const FeatureMatrix& features) {
  if (features.NumFrames() < 1) throw ArgumentError("feature matrix has no frames");
  std::vector<uint8_t> out;
  out.insert(out.end(), {'S', 'V', 'F', 'C'});
  PutU32(out, kVersion);
  PutU32(out, static_cast<uint32_t>(features.utterance_id.size()));
  out.insert(out.end(), features.utterance_id.begin(), features.utterance_id.end());
  PutU32(out, static_cast<uint32_t>(features.NumFrames()));
  PutU32(out, static_cast<uint32_t>(features.Dim()));
  for (size_t i = 0; i < features.values.Size(); ++i) {
    uint64_t u = std::bit_cast<uint64_t>(features.values.Data()[i]);
    for (int b = 0; b < 8; ++b) out.push_back(static_cast<uint8_t>((u >> (8 * b)) & 0xff));
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path.string());
  f.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
  if (!f) throw IoError("write failed for " + path.string());
}

FeatureMatrix ReadFeatureCache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "SVFC", 4) != 0)
    throw FormatError(path.string() + ": not a feature cache file");
  if (GetU32(bytes.data() + 4) != kVersion)
    throw FormatError(path.string() + ": unsupported feature cache version");
  const uint32_t id_len = GetU32(bytes.data() + 8);
  size_t pos = 12;
  if (pos + id_len + 8 > bytes.size()) throw FormatError(path.string() + ": truncated header");
  FeatureMatrix out;
  out.utterance_id.assign(reinterpret_cast<const char*>(bytes.data() + pos), id_len);
  pos += id_len;
  const uint32_t n_frames = GetU32(bytes.data() + pos);
  const uint32_t dim = GetU32(bytes.data() + pos + 4);
  pos += 8;
  const size_t need = static_cast<size_t>(n_frames) * dim * 8;
  if (bytes.size() - pos != need)
    throw FormatError(path.string() + ": payload size mismatch");
  out.values = Matrix(static_cast<int>(n_frames), static_cast<int>(dim));
  for (size_t i = 0; i < static_cast<size_t>(n_frames) * dim; ++i) {
    uint64_t u = 0;
    for (int b = 7; b >= 0; --b) u = (u << 8) | bytes[pos + i * 8 + b];
    out.values.Data()[i] = std::bit_cast<double>(u);
  }
  return out;
}

}  // namespace svkit
