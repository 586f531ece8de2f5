// core/svkit/hmm/hmm-model.h

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

#ifndef SVKIT_HMM_HMM_MODEL_H_
#define SVKIT_HMM_HMM_MODEL_H_

#include <cstdint>
#include <vector>

#include "svkit/base/matrix.h"
#include "svkit/feat/mfcc.h"
#include "svkit/gmm/diag-gmm.h"

namespace svkit {

/// Left-to-right HMM: every state allows a self-loop and a single step to
/// the next state; the last state self-loops only. Decoding starts in
/// state 0. Emissions are one diagonal GMM per state.
struct HmmModel {
  Matrix transitions;             // n_states x n_states, rows stochastic
  std::vector<DiagGmm> emissions; // one per state

  int NumStates() const { return static_cast<int>(emissions.size()); }
  int Dim() const { return emissions.empty() ? 0 : emissions[0].Dim(); }
};

void ValidateHmm(const HmmModel& model);

/// Assigns n_frames frames to n_states contiguous blocks of near-equal
/// length; the initial alignment for segmental training.
std::vector<int> UniformSegmentation(int n_frames, int n_states);

struct ViterbiResult {
  std::vector<int> path;
  double log_likelihood = 0.0;
};

/// Core decoder over a precomputed emission log-likelihood table
/// (n_frames x n_states) and a transition probability matrix.
ViterbiResult ViterbiDecodeEmissions(const Matrix& emission_ll, const Matrix& transitions);

/// Max-probability state sequence under the left-to-right constraint,
/// together with the joint log-probability of path and observations.
ViterbiResult Viterbi(const HmmModel& model, const FeatureMatrix& obs);

/// Per-frame state labels: the Viterbi path.
std::vector<int> ForceAlign(const HmmModel& model, const FeatureMatrix& obs);

/// Viterbi log-likelihood normalized by frame count.
double HmmScore(const HmmModel& model, const FeatureMatrix& obs);

/// Framewise score of a single feature vector against the model:
/// max over states of (emission log-likelihood + log self-loop probability).
/// This is the per-frame proxy used to build score-difference vectors.
double FrameProxyScore(const HmmModel& model, std::span<const double> frame);

struct HmmFitOptions {
  int n_states = 5;
  int n_mix = 64;
  int max_iter = 10;            // segmental re-alignment rounds
  GmmFitOptions gmm;            // per-state emission fits
};

struct HmmFitResult {
  HmmModel model;
  std::vector<double> aligned_ll_history;  // total Viterbi LL per round
  int iterations = 0;
};

/// Segmental (Viterbi) training: uniform-segmentation start, then rounds of
/// {fit per-state GMMs on assigned frames, re-estimate transitions from
/// aligned counts with add-one smoothing, re-align by Viterbi} until the
/// alignments stop changing, the round cap is hit, or a round fails to
/// improve the total aligned log-likelihood (which reverts to the previous
/// model, keeping the recorded history nondecreasing).
/// Throws TooShortError if any utterance has fewer frames than states.
HmmFitResult FitHmm(const std::vector<FeatureMatrix>& utterances, const HmmFitOptions& opts,
                    uint64_t seed);

}  // namespace svkit

#endif  // SVKIT_HMM_HMM_MODEL_H_
