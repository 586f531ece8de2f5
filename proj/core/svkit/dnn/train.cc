// core/svkit/dnn/train.cc

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

#include "svkit/dnn/train.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "svkit/base/error.h"
#include "svkit/base/rng.h"

namespace svkit {

namespace {

void ValidateTrainInputs(const DnnModel& model, const Matrix& inputs,
                         const std::vector<int>& labels, const TrainConfig& cfg) {
  ValidateDnn(model);
  if (inputs.NumRows() < 1) throw ArgumentError("no training rows");
  if (inputs.NumRows() != static_cast<int>(labels.size()))
    throw ArgumentError("label count does not match input rows");
  if (inputs.NumCols() != model.InputDim())
    throw ArgumentError("training input dim does not match network");
  for (int label : labels)
    if (label < 0 || label >= model.OutputDim())
      throw ArgumentError("label " + std::to_string(label) + " outside [0, " +
                          std::to_string(model.OutputDim()) + ")");
  if (cfg.learning_rate <= 0) throw ArgumentError("learning_rate must be positive");
  if (cfg.momentum < 0 || cfg.momentum >= 1) throw ArgumentError("momentum must be in [0, 1)");
  if (cfg.batch_size < 1 || cfg.epochs < 1) throw ArgumentError("bad batch_size or epochs");
  if (cfg.first_trainable_layer < 0 || cfg.first_trainable_layer >= model.NumWeightLayers())
    throw ArgumentError("first_trainable_layer out of range");
}

// Forward pass storing post-activation values per layer, then backprop of
// the softmax cross-entropy. Gradients accumulate (scaled by `scale`).
double BackpropOne(const DnnModel& model, std::span<const double> x, int label, double scale,
                   DnnGradients* grads) {
  const int L = model.NumWeightLayers();
  std::vector<std::vector<double>> acts(L + 1);
  acts[0].assign(x.begin(), x.end());
  for (int l = 0; l < L; ++l) {
    const Matrix& w = model.weights[l];
    acts[l + 1].resize(w.NumRows());
    for (int i = 0; i < w.NumRows(); ++i) {
      double acc = model.biases[l][i];
      auto row = w.Row(i);
      for (int j = 0; j < w.NumCols(); ++j) acc += row[j] * acts[l][j];
      acts[l + 1][i] = (l + 1 < L && acc < 0) ? 0.0 : acc;  // ReLU on hidden layers
    }
  }

  // Softmax + cross-entropy; delta on logits is (p - onehot).
  std::vector<double>& logits = acts[L];
  double m = *std::max_element(logits.begin(), logits.end());
  double sum = 0.0;
  std::vector<double> probs(logits.size());
  for (size_t i = 0; i < logits.size(); ++i) {
    probs[i] = std::exp(logits[i] - m);
    sum += probs[i];
  }
  for (double& p : probs) p /= sum;
  double loss = -(logits[label] - m - std::log(sum));

  std::vector<double> delta = probs;
  delta[label] -= 1.0;

  for (int l = L - 1; l >= 0; --l) {
    const Matrix& w = model.weights[l];
    Matrix& gw = grads->weights[l];
    std::vector<double>& gb = grads->biases[l];
    for (int i = 0; i < w.NumRows(); ++i) {
      gb[i] += scale * delta[i];
      for (int j = 0; j < w.NumCols(); ++j) gw(i, j) += scale * delta[i] * acts[l][j];
    }
    if (l == 0) break;
    std::vector<double> prev(w.NumCols(), 0.0);
    for (int j = 0; j < w.NumCols(); ++j) {
      if (acts[l][j] <= 0.0) continue;  // through the ReLU
      double acc = 0.0;
      for (int i = 0; i < w.NumRows(); ++i) acc += w(i, j) * delta[i];
      prev[j] = acc;
    }
    delta = std::move(prev);
  }
  return loss;
}

DnnGradients ZeroGradients(const DnnModel& model) {
  DnnGradients g;
  for (int l = 0; l < model.NumWeightLayers(); ++l) {
    g.weights.emplace_back(model.weights[l].NumRows(), model.weights[l].NumCols());
    g.biases.emplace_back(model.biases[l].size(), 0.0);
  }
  return g;
}

}  // namespace

double ComputeLossAndGradients(const DnnModel& model, const Matrix& inputs,
                               const std::vector<int>& labels, DnnGradients* grads) {
  const int n = inputs.NumRows();
  if (n < 1) throw ArgumentError("empty batch");
  *grads = ZeroGradients(model);
  double total = 0.0;
  const double scale = 1.0 / n;
  for (int i = 0; i < n; ++i)
    total += BackpropOne(model, inputs.Row(i), labels[i], scale, grads);
  return total / n;
}

TrainResult TrainDnn(DnnModel& model, const Matrix& inputs, const std::vector<int>& labels,
                     const TrainConfig& cfg) {
  ValidateTrainInputs(model, inputs, labels, cfg);
  const int n = inputs.NumRows();
  const int L = model.NumWeightLayers();

  std::vector<Matrix> vel_w;
  std::vector<std::vector<double>> vel_b;
  for (int l = 0; l < L; ++l) {
    vel_w.emplace_back(model.weights[l].NumRows(), model.weights[l].NumCols());
    vel_b.emplace_back(model.biases[l].size(), 0.0);
  }

  Rng rng(cfg.seed);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);

  TrainResult result;
  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    rng.Shuffle(order);
    double epoch_loss = 0.0;
    for (int start = 0; start < n; start += cfg.batch_size) {
      const int end = std::min(n, start + cfg.batch_size);
      const int bs = end - start;
      DnnGradients grads = ZeroGradients(model);
      double batch_loss = 0.0;
      const double scale = 1.0 / bs;
      for (int i = start; i < end; ++i)
        batch_loss +=
            BackpropOne(model, inputs.Row(order[i]), labels[order[i]], scale, &grads);
      batch_loss /= bs;
      if (!std::isfinite(batch_loss))
        throw DivergenceError("training loss became non-finite at epoch " +
                              std::to_string(epoch));
      epoch_loss += batch_loss * bs;

      for (int l = cfg.first_trainable_layer; l < L; ++l) {
        Matrix& w = model.weights[l];
        for (size_t i = 0; i < w.Size(); ++i) {
          vel_w[l].Data()[i] =
              cfg.momentum * vel_w[l].Data()[i] - cfg.learning_rate * grads.weights[l].Data()[i];
          w.Data()[i] += vel_w[l].Data()[i];
        }
        for (size_t i = 0; i < model.biases[l].size(); ++i) {
          vel_b[l][i] = cfg.momentum * vel_b[l][i] - cfg.learning_rate * grads.biases[l][i];
          model.biases[l][i] += vel_b[l][i];
        }
      }
    }
    result.epoch_loss.push_back(epoch_loss / n);
  }
  return result;
}

}  // namespace svkit
