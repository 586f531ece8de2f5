// core/svkit/gmm/diag-gmm.cc

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

#include "svkit/gmm/diag-gmm.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "svkit/base/error.h"
#include "svkit/base/rng.h"

namespace svkit {

namespace {

double LogSumExp(std::span<const double> v) {
  double m = -std::numeric_limits<double>::infinity();
  for (double x : v) m = std::max(m, x);
  if (!std::isfinite(m)) return m;
  double s = 0.0;
  for (double x : v) s += std::exp(x - m);
  return m + std::log(s);
}

double SquaredDistance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

// Seeded farthest-point seeding followed by Lloyd iterations. Returns the
// final hard assignment of rows to k centers.
std::vector<int> KMeansAssign(const Matrix& data, int k, int iters, uint64_t seed) {
  const int n = data.NumRows();
  const int dim = data.NumCols();
  Rng rng(seed);

  Matrix centers(k, dim);
  std::vector<double> min_dist(n, std::numeric_limits<double>::infinity());
  int first = rng.UniformInt(n);
  for (int d = 0; d < dim; ++d) centers(0, d) = data(first, d);
  for (int c = 1; c < k; ++c) {
    int far_idx = 0;
    double far_dist = -1.0;
    for (int i = 0; i < n; ++i) {
      min_dist[i] = std::min(min_dist[i], SquaredDistance(data.Row(i), centers.Row(c - 1)));
      if (min_dist[i] > far_dist) {
        far_dist = min_dist[i];
        far_idx = i;
      }
    }
    for (int d = 0; d < dim; ++d) centers(c, d) = data(far_idx, d);
  }

  std::vector<int> assign(n, 0);
  for (int it = 0; it < iters; ++it) {
    bool changed = false;
    for (int i = 0; i < n; ++i) {
      int best = 0;
      double best_dist = std::numeric_limits<double>::infinity();
      for (int c = 0; c < k; ++c) {
        double d = SquaredDistance(data.Row(i), centers.Row(c));
        if (d < best_dist) {
          best_dist = d;
          best = c;
        }
      }
      if (assign[i] != best) {
        assign[i] = best;
        changed = true;
      }
    }
    // Recompute centers; an emptied cluster is reseated at the row farthest
    // from its current center assignment.
    std::vector<int> counts(k, 0);
    Matrix sums(k, dim);
    for (int i = 0; i < n; ++i) {
      ++counts[assign[i]];
      for (int d = 0; d < dim; ++d) sums(assign[i], d) += data(i, d);
    }
    for (int c = 0; c < k; ++c) {
      if (counts[c] == 0) {
        int far_idx = 0;
        double far_dist = -1.0;
        for (int i = 0; i < n; ++i) {
          double d = SquaredDistance(data.Row(i), centers.Row(assign[i]));
          if (d > far_dist) {
            far_dist = d;
            far_idx = i;
          }
        }
        assign[far_idx] = c;
        counts[c] = 1;
        for (int d = 0; d < dim; ++d) sums(c, d) = data(far_idx, d);
        changed = true;
      }
      for (int d = 0; d < dim; ++d) centers(c, d) = sums(c, d) / counts[c];
    }
    if (!changed && it > 0) break;
  }
  return assign;
}

DiagGmm InitFromAssignment(const Matrix& data, int k, const std::vector<int>& assign) {
  const int n = data.NumRows();
  const int dim = data.NumCols();
  DiagGmm model;
  model.weights.assign(k, 0.0);
  model.means = Matrix(k, dim);
  model.variances = Matrix(k, dim);

  std::vector<int> counts(k, 0);
  for (int i = 0; i < n; ++i) {
    ++counts[assign[i]];
    for (int d = 0; d < dim; ++d) model.means(assign[i], d) += data(i, d);
  }
  for (int c = 0; c < k; ++c)
    for (int d = 0; d < dim; ++d) model.means(c, d) /= std::max(1, counts[c]);
  for (int i = 0; i < n; ++i)
    for (int d = 0; d < dim; ++d) {
      double diff = data(i, d) - model.means(assign[i], d);
      model.variances(assign[i], d) += diff * diff;
    }
  for (int c = 0; c < k; ++c) {
    model.weights[c] = static_cast<double>(counts[c]) / n;
    for (int d = 0; d < dim; ++d) {
      double v = model.variances(c, d) / std::max(1, counts[c]);
      model.variances(c, d) = std::max(v, kVarianceFloor);
    }
  }
  return model;
}

GmmFitResult RunEm(DiagGmm model, const Matrix& data, const GmmFitOptions& opts) {
  const int n = data.NumRows();
  const int dim = data.NumCols();
  const int k = model.NumComponents();

  GmmFitResult result;
  Matrix log_resp(n, k);
  for (int iter = 0; iter < opts.max_iter; ++iter) {
    // E-step.
    double total_ll = 0.0;
    for (int i = 0; i < n; ++i) {
      std::vector<double> comp = ComponentLogLikelihoods(model, data.Row(i));
      double lse = LogSumExp(comp);
      total_ll += lse;
      for (int c = 0; c < k; ++c) log_resp(i, c) = comp[c] - lse;
    }
    double mean_ll = total_ll / n;
    result.mean_ll_history.push_back(mean_ll);
    result.iterations = iter + 1;
    if (iter > 0 &&
        std::abs(mean_ll - result.mean_ll_history[iter - 1]) < opts.tol)
      break;

    // M-step.
    std::vector<double> mass(k, 0.0);
    Matrix new_means(k, dim);
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < k; ++c) {
        double r = std::exp(log_resp(i, c));
        mass[c] += r;
        for (int d = 0; d < dim; ++d) new_means(c, d) += r * data(i, d);
      }
    for (int c = 0; c < k; ++c) {
      if (mass[c] <= 0) continue;  // soft EM keeps mass positive; belt and braces
      for (int d = 0; d < dim; ++d) new_means(c, d) /= mass[c];
    }
    Matrix new_vars(k, dim);
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < k; ++c) {
        double r = std::exp(log_resp(i, c));
        for (int d = 0; d < dim; ++d) {
          double diff = data(i, d) - new_means(c, d);
          new_vars(c, d) += r * diff * diff;
        }
      }
    for (int c = 0; c < k; ++c) {
      if (mass[c] <= 0) continue;
      model.weights[c] = mass[c] / n;
      for (int d = 0; d < dim; ++d) {
        model.means(c, d) = new_means(c, d);
        model.variances(c, d) = std::max(new_vars(c, d) / mass[c], kVarianceFloor);
      }
    }
    double wsum = 0.0;
    for (double w : model.weights) wsum += w;
    for (double& w : model.weights) w /= wsum;
  }
  result.model = std::move(model);
  return result;
}

}  // namespace

void ValidateGmm(const DiagGmm& model) {
  const int k = model.NumComponents();
  if (k < 1) throw ArgumentError("GMM needs at least one component");
  if (model.means.NumRows() != k || model.variances.NumRows() != k ||
      model.means.NumCols() != model.variances.NumCols())
    throw ArgumentError("GMM parameter shapes disagree");
  double wsum = 0.0;
  for (double w : model.weights) {
    if (w < 0) throw ArgumentError("GMM weight is negative");
    wsum += w;
  }
  if (std::abs(wsum - 1.0) > 1e-9) throw ArgumentError("GMM weights do not sum to 1");
  if (!model.means.AllFinite() || !model.variances.AllFinite())
    throw ArgumentError("GMM parameters are not finite");
  for (int c = 0; c < k; ++c)
    for (int d = 0; d < model.Dim(); ++d)
      if (model.variances(c, d) < kVarianceFloor)
        throw ArgumentError("GMM variance below floor");
}

std::vector<double> ComponentLogLikelihoods(const DiagGmm& model, std::span<const double> x) {
  const int dim = model.Dim();
  if (static_cast<int>(x.size()) != dim)
    throw ArgumentError("feature dim " + std::to_string(x.size()) + " != model dim " +
                        std::to_string(dim));
  constexpr double kLogZeroWeight = -745.0;  // exp() underflows to 0 below this
  const double log2pi = std::log(2.0 * std::numbers::pi);
  std::vector<double> out(model.NumComponents());
  for (int c = 0; c < model.NumComponents(); ++c) {
    double quad = 0.0, logdet = 0.0;
    for (int d = 0; d < dim; ++d) {
      double var = model.variances(c, d);
      double diff = x[d] - model.means(c, d);
      quad += diff * diff / var;
      logdet += std::log(var);
    }
    double logw = model.weights[c] > 0 ? std::log(model.weights[c]) : kLogZeroWeight;
    out[c] = logw - 0.5 * (dim * log2pi + logdet + quad);
  }
  return out;
}

double GmmLogLikelihood(const DiagGmm& model, std::span<const double> x) {
  std::vector<double> comp = ComponentLogLikelihoods(model, x);
  return LogSumExp(comp);
}

int ArgmaxComponent(const DiagGmm& model, std::span<const double> x) {
  std::vector<double> comp = ComponentLogLikelihoods(model, x);
  int best = 0;
  for (int c = 1; c < static_cast<int>(comp.size()); ++c)
    if (comp[c] > comp[best]) best = c;
  return best;
}

int64_t SubclassLabel(const DiagGmm& model, int speaker_index, std::span<const double> x) {
  if (speaker_index < 0) throw ArgumentError("speaker index must be nonnegative");
  return static_cast<int64_t>(speaker_index) * model.NumComponents() +
         ArgmaxComponent(model, x);
}

GmmFitResult FitGmm(const Matrix& data, int k, const GmmFitOptions& opts, uint64_t seed) {
  if (k < 1) throw ArgumentError("k must be >= 1");
  if (opts.max_iter < 1) throw ArgumentError("max_iter must be >= 1");
  if (data.NumRows() < k)
    throw InsufficientDataError("cannot fit " + std::to_string(k) + " components to " +
                                std::to_string(data.NumRows()) + " rows");
  if (!data.AllFinite()) throw ArgumentError("training data contains non-finite values");

  std::vector<int> assign = KMeansAssign(data, k, opts.kmeans_iters, seed);
  DiagGmm init = InitFromAssignment(data, k, assign);
  return RunEm(std::move(init), data, opts);
}

GmmFitResult FitGmmFrom(const DiagGmm& init, const Matrix& data, const GmmFitOptions& opts) {
  if (data.NumRows() < 1) throw InsufficientDataError("no rows to fit");
  if (data.NumCols() != init.Dim()) throw ArgumentError("data dim != model dim");
  if (!data.AllFinite()) throw ArgumentError("training data contains non-finite values");
  return RunEm(init, data, opts);
}

}  // namespace svkit
