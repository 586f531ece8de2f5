// core/svkit/base/rng.h

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

#ifndef SVKIT_BASE_RNG_H_
#define SVKIT_BASE_RNG_H_

#include <cstdint>
#include <random>
#include <vector>

namespace svkit {

uint64_t SplitMix64(uint64_t* state);

/// Derives an independent child seed from a master seed and a stream id.
/// Every seeded component in the toolkit gets its seed through here, so one
/// master seed pins the whole experiment.
uint64_t DeriveSeed(uint64_t master, uint64_t stream);

/// mt19937_64 plus hand-rolled value mappings. The standard distributions are
/// not pinned across library implementations, and experiment outputs must be
/// byte-reproducible, so we map raw engine output ourselves.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t NextUint64() { return engine_(); }

  /// Uniform in [0, 1), 53-bit resolution.
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  /// Uniform integer in [0, n). n must be positive.
  int UniformInt(int n);

  /// Standard normal via Box-Muller; caches the second draw.
  double Gaussian();

  template <class T>
  void Shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(UniformInt(static_cast<int>(i)));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace svkit

#endif  // SVKIT_BASE_RNG_H_
