// core/svkit/base/matrix.h

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

#ifndef SVKIT_BASE_MATRIX_H_
#define SVKIT_BASE_MATRIX_H_

#include <cstddef>
#include <span>
#include <vector>

namespace svkit {

/// Row-major dense matrix of doubles. Small and deliberately dumb; all the
/// numeric code in this toolkit is explicit loops over rows.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int num_rows, int num_cols, double value = 0.0);

  int NumRows() const { return num_rows_; }
  int NumCols() const { return num_cols_; }
  bool Empty() const { return data_.empty(); }

  double& operator()(int r, int c) { return data_[static_cast<size_t>(r) * num_cols_ + c]; }
  double operator()(int r, int c) const { return data_[static_cast<size_t>(r) * num_cols_ + c]; }

  std::span<double> Row(int r) {
    return {data_.data() + static_cast<size_t>(r) * num_cols_, static_cast<size_t>(num_cols_)};
  }
  std::span<const double> Row(int r) const {
    return {data_.data() + static_cast<size_t>(r) * num_cols_, static_cast<size_t>(num_cols_)};
  }

  double* Data() { return data_.data(); }
  const double* Data() const { return data_.data(); }
  size_t Size() const { return data_.size(); }

  bool AllFinite() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.num_rows_ == b.num_rows_ && a.num_cols_ == b.num_cols_ && a.data_ == b.data_;
  }

 private:
  int num_rows_ = 0;
  int num_cols_ = 0;
  std::vector<double> data_;
};

bool AllFinite(std::span<const double> values);

}  // namespace svkit

#endif  // SVKIT_BASE_MATRIX_H_
