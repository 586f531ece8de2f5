// core/svkit/dnn/network.h

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

#ifndef SVKIT_DNN_NETWORK_H_
#define SVKIT_DNN_NETWORK_H_

#include <cstdint>
#include <span>
#include <vector>

#include "svkit/base/matrix.h"

namespace svkit {

/// Dense feed-forward classifier: ReLU hidden layers, softmax output.
struct DnnModel {
  std::vector<int> layer_sizes;            // [input, hidden..., classes]
  std::vector<Matrix> weights;             // layer l: (sizes[l+1] x sizes[l])
  std::vector<std::vector<double>> biases; // layer l: sizes[l+1]

  int NumWeightLayers() const { return static_cast<int>(weights.size()); }
  int InputDim() const { return layer_sizes.front(); }
  int OutputDim() const { return layer_sizes.back(); }
};

void ValidateDnn(const DnnModel& model);

/// he_uniform init: weights uniform in [-sqrt(6/fan_in), +sqrt(6/fan_in)],
/// biases zero. Needs >= 2 layers and an output of >= 2 classes.
DnnModel InitDnn(const std::vector<int>& layer_sizes, uint64_t seed);

/// Softmax class probabilities; sums to 1 within 1e-9 and strictly positive.
std::vector<double> Forward(const DnnModel& model, std::span<const double> x);

/// Activations entering the output layer (the hidden-stack forward pass);
/// used to verify that output-layer surgery leaves the stack intact.
std::vector<double> HiddenForward(const DnnModel& model, std::span<const double> x);

/// Keeps every hidden layer bit-exactly and installs a fresh he_uniform
/// output layer with n_new_classes units and zero biases.
DnnModel ReplaceOutputLayer(const DnnModel& model, int n_new_classes, uint64_t seed);

}  // namespace svkit

#endif  // SVKIT_DNN_NETWORK_H_
