// core/svkit/dnn/train.h

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

#ifndef SVKIT_DNN_TRAIN_H_
#define SVKIT_DNN_TRAIN_H_

#include <cstdint>
#include <vector>

#include "svkit/base/matrix.h"
#include "svkit/dnn/network.h"

namespace svkit {

struct TrainConfig {
  double learning_rate = 0.01;
  double momentum = 0.9;
  int batch_size = 128;
  int epochs = 150;
  uint64_t seed = 0;
  /// Layers below this index are frozen. Used by enrollment, which retrains
  /// only the freshly installed output layer.
  int first_trainable_layer = 0;
};

struct TrainResult {
  std::vector<double> epoch_loss;  // mean cross-entropy per epoch
};

/// Mini-batch SGD with classical momentum (v <- m*v - lr*g; w <- w + v) on
/// the cross-entropy loss, shuffling the data each epoch with a seeded rng.
/// Throws ArgumentError on out-of-range labels and DivergenceError (naming
/// the epoch) if the loss goes non-finite.
TrainResult TrainDnn(DnnModel& model, const Matrix& inputs, const std::vector<int>& labels,
                     const TrainConfig& cfg);

struct DnnGradients {
  std::vector<Matrix> weights;
  std::vector<std::vector<double>> biases;
};

/// Mean cross-entropy over the batch plus its analytic gradients via
/// backpropagation. Exposed so tests can check the gradients against
/// central finite differences.
double ComputeLossAndGradients(const DnnModel& model, const Matrix& inputs,
                               const std::vector<int>& labels, DnnGradients* grads);

}  // namespace svkit

#endif  // SVKIT_DNN_TRAIN_H_
