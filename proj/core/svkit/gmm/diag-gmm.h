// core/svkit/gmm/diag-gmm.h

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

#ifndef SVKIT_GMM_DIAG_GMM_H_
#define SVKIT_GMM_DIAG_GMM_H_

#include <cstdint>
#include <span>
#include <vector>

#include "svkit/base/matrix.h"

namespace svkit {

constexpr double kVarianceFloor = 1e-6;

/// Mixture of diagonal-covariance Gaussians.
struct DiagGmm {
  std::vector<double> weights;  // k, nonnegative, sums to 1
  Matrix means;                 // k x dim
  Matrix variances;             // k x dim, floored at kVarianceFloor

  int NumComponents() const { return static_cast<int>(weights.size()); }
  int Dim() const { return means.NumCols(); }
};

/// Throws ArgumentError when the model violates its invariants.
void ValidateGmm(const DiagGmm& model);

/// log sum_i w_i N(x; mu_i, diag sigma_i^2), evaluated with log-sum-exp.
double GmmLogLikelihood(const DiagGmm& model, std::span<const double> x);

/// log(w_i N_i(x)) for every component.
std::vector<double> ComponentLogLikelihoods(const DiagGmm& model, std::span<const double> x);

/// Index of the component with maximal weighted likelihood; ties go to the
/// lowest index.
int ArgmaxComponent(const DiagGmm& model, std::span<const double> x);

/// Global subclass id for speaker j: j * k + argmax component.
int64_t SubclassLabel(const DiagGmm& model, int speaker_index, std::span<const double> x);

struct GmmFitOptions {
  int max_iter = 1000;
  double tol = 1e-6;    // on the change in mean log-likelihood
  int kmeans_iters = 20;
};

struct GmmFitResult {
  DiagGmm model;
  std::vector<double> mean_ll_history;  // mean per-row log-likelihood per EM iteration
  int iterations = 0;
};

/// EM with seeded k-means initialization (farthest-point seeding).
/// Throws InsufficientDataError when rows < k, ArgumentError on non-finite
/// input or bad options.
GmmFitResult FitGmm(const Matrix& data, int k, const GmmFitOptions& opts, uint64_t seed);

/// EM starting from an existing model instead of k-means; used for
/// warm-started refits inside segmental HMM training.
GmmFitResult FitGmmFrom(const DiagGmm& init, const Matrix& data, const GmmFitOptions& opts);

}  // namespace svkit

#endif  // SVKIT_GMM_DIAG_GMM_H_
