// core/svkit/base/base64.h

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

#ifndef SVKIT_BASE_BASE64_H_
#define SVKIT_BASE_BASE64_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace svkit {

std::string Base64Encode(std::span<const uint8_t> bytes);
std::vector<uint8_t> Base64Decode(const std::string& text);

/// Doubles <-> base64, little-endian IEEE-754 bytes. This is the on-disk
/// encoding of every numeric block in model files.
std::string DoublesToBase64(std::span<const double> values);
std::vector<double> Base64ToDoubles(const std::string& text);

}  // namespace svkit

#endif  // SVKIT_BASE_BASE64_H_
