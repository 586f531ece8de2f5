// core/svkit/base/error.h

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

#ifndef SVKIT_BASE_ERROR_H_
#define SVKIT_BASE_ERROR_H_

#include <stdexcept>
#include <string>

namespace svkit {

// Base class for everything svkit throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller violated a documented precondition.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Malformed input file (bad magic, truncated container, broken CSV).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Well-formed file in an encoding we deliberately do not handle.
class UnsupportedFormatError : public FormatError {
 public:
  using FormatError::FormatError;
};

class EmptyAudioError : public FormatError {
 public:
  using FormatError::FormatError;
};

class EmptyManifestError : public Error {
 public:
  using Error::Error;
};

// Input has fewer frames/samples than the operation needs.
class TooShortError : public Error {
 public:
  using Error::Error;
};

class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

// Score set without both genuine and impostor trials.
class DegenerateSetError : public Error {
 public:
  using Error::Error;
};

// Statistical sample with zero spread.
class DegenerateSampleError : public Error {
 public:
  using Error::Error;
};

// Training produced a non-finite loss.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace svkit

#endif  // SVKIT_BASE_ERROR_H_
