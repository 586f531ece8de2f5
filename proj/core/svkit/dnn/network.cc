// core/svkit/dnn/network.cc

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

#include "svkit/dnn/network.h"

#include <algorithm>
#include <cmath>

#include "svkit/base/error.h"
#include "svkit/base/rng.h"

namespace svkit {

namespace {

Matrix HeUniformWeights(int fan_out, int fan_in, Rng& rng) {
  const double limit = std::sqrt(6.0 / fan_in);
  Matrix w(fan_out, fan_in);
  for (int i = 0; i < fan_out; ++i)
    for (int j = 0; j < fan_in; ++j) w(i, j) = rng.Uniform(-limit, limit);
  return w;
}

std::vector<double> AffineRelu(const Matrix& w, const std::vector<double>& b,
                               std::span<const double> x, bool relu) {
  std::vector<double> out(w.NumRows());
  for (int i = 0; i < w.NumRows(); ++i) {
    double acc = b[i];
    auto row = w.Row(i);
    for (int j = 0; j < w.NumCols(); ++j) acc += row[j] * x[j];
    out[i] = relu && acc < 0 ? 0.0 : acc;
  }
  return out;
}

}  // namespace

void ValidateDnn(const DnnModel& model) {
  const int L = model.NumWeightLayers();
  if (static_cast<int>(model.layer_sizes.size()) != L + 1 || L < 1)
    throw ArgumentError("layer_sizes does not match weight layers");
  if (model.OutputDim() < 2) throw ArgumentError("output layer needs >= 2 classes");
  for (int l = 0; l < L; ++l) {
    if (model.weights[l].NumRows() != model.layer_sizes[l + 1] ||
        model.weights[l].NumCols() != model.layer_sizes[l] ||
        static_cast<int>(model.biases[l].size()) != model.layer_sizes[l + 1])
      throw ArgumentError("weight shapes do not chain");
    if (!model.weights[l].AllFinite() || !AllFinite(model.biases[l]))
      throw ArgumentError("non-finite network parameters");
  }
}

DnnModel InitDnn(const std::vector<int>& layer_sizes, uint64_t seed) {
  if (layer_sizes.size() < 2) throw ArgumentError("need at least input and output layers");
  for (int s : layer_sizes)
    if (s < 1) throw ArgumentError("layer sizes must be positive");
  if (layer_sizes.back() < 2) throw ArgumentError("output layer needs >= 2 classes");

  DnnModel model;
  model.layer_sizes = layer_sizes;
  Rng rng(seed);
  for (size_t l = 0; l + 1 < layer_sizes.size(); ++l) {
    model.weights.push_back(HeUniformWeights(layer_sizes[l + 1], layer_sizes[l], rng));
    model.biases.emplace_back(layer_sizes[l + 1], 0.0);
  }
  return model;
}

std::vector<double> Softmax(std::span<const double> logits) {
  double m = *std::max_element(logits.begin(), logits.end());
  std::vector<double> out(logits.size());
  double sum = 0.0;
  for (size_t i = 0; i < logits.size(); ++i) {
    out[i] = std::exp(logits[i] - m);
    sum += out[i];
  }
  for (double& p : out) p /= sum;
  return out;
}

std::vector<double> HiddenForward(const DnnModel& model, std::span<const double> x) {
  if (static_cast<int>(x.size()) != model.InputDim())
    throw ArgumentError("input dim " + std::to_string(x.size()) + " != network input " +
                        std::to_string(model.InputDim()));
  std::vector<double> act(x.begin(), x.end());
  for (int l = 0; l + 1 < model.NumWeightLayers(); ++l)
    act = AffineRelu(model.weights[l], model.biases[l], act, /*relu=*/true);
  return act;
}

std::vector<double> Forward(const DnnModel& model, std::span<const double> x) {
  std::vector<double> hidden = HiddenForward(model, x);
  const int last = model.NumWeightLayers() - 1;
  std::vector<double> logits =
      AffineRelu(model.weights[last], model.biases[last], hidden, /*relu=*/false);
  return Softmax(logits);
}

DnnModel ReplaceOutputLayer(const DnnModel& model, int n_new_classes, uint64_t seed) {
  if (n_new_classes < 2) throw ArgumentError("new output layer needs >= 2 classes");
  DnnModel out = model;
  const int last = out.NumWeightLayers() - 1;
  const int fan_in = out.layer_sizes[last];
  Rng rng(seed);
  out.weights[last] = HeUniformWeights(n_new_classes, fan_in, rng);
  out.biases[last].assign(n_new_classes, 0.0);
  out.layer_sizes.back() = n_new_classes;
  return out;
}

}  // namespace svkit
