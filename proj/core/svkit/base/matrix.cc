// core/svkit/base/matrix.cc

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

#include "svkit/base/matrix.h"

#include <cmath>

#include "svkit/base/error.h"

namespace svkit {

Matrix::Matrix(int num_rows, int num_cols, double value)
    : num_rows_(num_rows), num_cols_(num_cols) {
  if (num_rows < 0 || num_cols < 0)
    throw ArgumentError("matrix dimensions must be nonnegative");
  data_.assign(static_cast<size_t>(num_rows) * static_cast<size_t>(num_cols), value);
}

bool Matrix::AllFinite() const {
  return svkit::AllFinite(std::span<const double>(data_.data(), data_.size()));
}

bool AllFinite(std::span<const double> values) {
  for (double v : values)
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace svkit
