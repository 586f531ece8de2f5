// core/svkit/feat/feature-cache.h

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

#ifndef SVKIT_FEAT_FEATURE_CACHE_H_
#define SVKIT_FEAT_FEATURE_CACHE_H_

#include <filesystem>

#include "svkit/feat/mfcc.h"

namespace svkit {

// One utterance per .svfc file. Layout (all integers little-endian):
//   bytes 0..3   magic "SVFC"
//   bytes 4..7   uint32 format version (1)
//   bytes 8..11  uint32 utterance id length
//   ...          utterance id bytes (UTF-8, no terminator)
//   uint32       n_frames
//   uint32       dim
//   ...          n_frames * dim float64, row-major little-endian

inline constexpr const char* kFeatureCacheExtension = ".svfc";

void WriteFeatureCache(const std::filesystem::path& path, const FeatureMatrix& features);
FeatureMatrix ReadFeatureCache(const std::filesystem::path& path);

}  // namespace svkit

#endif  // SVKIT_FEAT_FEATURE_CACHE_H_
