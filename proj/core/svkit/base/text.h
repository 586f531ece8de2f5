// core/svkit/base/text.h

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

#ifndef SVKIT_BASE_TEXT_H_
#define SVKIT_BASE_TEXT_H_

#include <filesystem>
#include <string>
#include <vector>

namespace svkit {

std::vector<std::string> Split(const std::string& s, char sep);
std::string Trim(const std::string& s);
std::string ToLower(const std::string& s);

/// Fixed-point decimal rendering, e.g. FormatFixed(3.14159, 2) == "3.14".
/// Used for all report output so repeated runs emit identical bytes.
std::string FormatFixed(double value, int decimals);

/// Shortest round-trippable rendering of a double ("%.17g" fallback).
std::string FormatExact(double value);

double ParseDouble(const std::string& s);
int ParseInt(const std::string& s);

std::string ReadTextFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, const std::string& contents);

}  // namespace svkit

#endif  // SVKIT_BASE_TEXT_H_
