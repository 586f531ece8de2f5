// core/svkit/hmm/hmm-model.cc

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

#include "svkit/hmm/hmm-model.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "svkit/base/error.h"
#include "svkit/base/rng.h"

namespace svkit {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

Matrix EmissionTable(const HmmModel& model, const FeatureMatrix& obs) {
  if (obs.Dim() != model.Dim())
    throw ArgumentError("observation dim " + std::to_string(obs.Dim()) + " != model dim " +
                        std::to_string(model.Dim()));
  if (obs.NumFrames() < 1) throw ArgumentError("observation has no frames");
  const int T = obs.NumFrames();
  const int S = model.NumStates();
  Matrix e(T, S);
  for (int t = 0; t < T; ++t)
    for (int s = 0; s < S; ++s) e(t, s) = GmmLogLikelihood(model.emissions[s], obs.values.Row(t));
  return e;
}

Matrix TransitionsFromAlignments(const std::vector<std::vector<int>>& alignments, int n_states) {
  // Add-one smoothing over the two admissible successors of each state.
  Matrix counts(n_states, n_states);
  for (const auto& path : alignments)
    for (size_t t = 1; t < path.size(); ++t) counts(path[t - 1], path[t]) += 1.0;

  Matrix trans(n_states, n_states);
  for (int s = 0; s < n_states; ++s) {
    if (s == n_states - 1) {
      trans(s, s) = 1.0;
      continue;
    }
    double self = counts(s, s) + 1.0;
    double next = counts(s, s + 1) + 1.0;
    trans(s, s) = self / (self + next);
    trans(s, s + 1) = next / (self + next);
  }
  return trans;
}

}  // namespace

void ValidateHmm(const HmmModel& model) {
  const int S = model.NumStates();
  if (S < 1) throw ArgumentError("HMM needs at least one state");
  if (model.transitions.NumRows() != S || model.transitions.NumCols() != S)
    throw ArgumentError("transition matrix shape mismatch");
  for (int i = 0; i < S; ++i) {
    double row_sum = 0.0;
    for (int j = 0; j < S; ++j) {
      double p = model.transitions(i, j);
      if (p < 0) throw ArgumentError("negative transition probability");
      bool allowed = (j == i) || (j == i + 1 && i < S - 1);
      if (!allowed && p != 0.0) throw ArgumentError("transition violates left-to-right topology");
      row_sum += p;
    }
    if (std::abs(row_sum - 1.0) > 1e-9) throw ArgumentError("transition row does not sum to 1");
  }
  const int dim = model.Dim();
  for (const auto& gmm : model.emissions) {
    ValidateGmm(gmm);
    if (gmm.Dim() != dim) throw ArgumentError("emission GMM dims disagree");
  }
}

std::vector<int> UniformSegmentation(int n_frames, int n_states) {
  if (n_frames < n_states)
    throw TooShortError("utterance has " + std::to_string(n_frames) + " frames, fewer than " +
                        std::to_string(n_states) + " states");
  std::vector<int> labels(n_frames);
  for (int t = 0; t < n_frames; ++t)
    labels[t] = static_cast<int>(static_cast<int64_t>(t) * n_states / n_frames);
  return labels;
}

ViterbiResult ViterbiDecodeEmissions(const Matrix& emission_ll, const Matrix& transitions) {
  const int T = emission_ll.NumRows();
  const int S = emission_ll.NumCols();
  if (transitions.NumRows() != S || transitions.NumCols() != S)
    throw ArgumentError("transition matrix does not match emission table");

  auto log_p = [&transitions](int i, int j) {
    double p = transitions(i, j);
    return p > 0 ? std::log(p) : kNegInf;
  };

  Matrix dp(T, S, kNegInf);
  Matrix back(T, S, -1.0);
  dp(0, 0) = emission_ll(0, 0);  // decoding starts in state 0
  for (int t = 1; t < T; ++t) {
    for (int s = 0; s < S; ++s) {
      double best = kNegInf;
      int best_prev = -1;
      // Predecessors in the left-to-right topology: s-1 and s.
      if (s > 0 && dp(t - 1, s - 1) > kNegInf) {
        double cand = dp(t - 1, s - 1) + log_p(s - 1, s);
        if (cand > best) {
          best = cand;
          best_prev = s - 1;
        }
      }
      if (dp(t - 1, s) > kNegInf) {
        double cand = dp(t - 1, s) + log_p(s, s);
        if (cand > best) {
          best = cand;
          best_prev = s;
        }
      }
      if (best_prev >= 0) {
        dp(t, s) = best + emission_ll(t, s);
        back(t, s) = best_prev;
      }
    }
  }

  int end_state = 0;
  for (int s = 1; s < S; ++s)
    if (dp(T - 1, s) > dp(T - 1, end_state)) end_state = s;

  ViterbiResult result;
  result.log_likelihood = dp(T - 1, end_state);
  result.path.assign(T, 0);
  result.path[T - 1] = end_state;
  for (int t = T - 1; t > 0; --t)
    result.path[t - 1] = static_cast<int>(back(t, result.path[t]));
  return result;
}

ViterbiResult Viterbi(const HmmModel& model, const FeatureMatrix& obs) {
  return ViterbiDecodeEmissions(EmissionTable(model, obs), model.transitions);
}

std::vector<int> ForceAlign(const HmmModel& model, const FeatureMatrix& obs) {
  return Viterbi(model, obs).path;
}

double HmmScore(const HmmModel& model, const FeatureMatrix& obs) {
  return Viterbi(model, obs).log_likelihood / obs.NumFrames();
}

double FrameProxyScore(const HmmModel& model, std::span<const double> frame) {
  double best = kNegInf;
  for (int s = 0; s < model.NumStates(); ++s) {
    double self = model.transitions(s, s);
    double score = GmmLogLikelihood(model.emissions[s], frame) +
                   (self > 0 ? std::log(self) : kNegInf);
    best = std::max(best, score);
  }
  return best;
}

HmmFitResult FitHmm(const std::vector<FeatureMatrix>& utterances, const HmmFitOptions& opts,
                    uint64_t seed) {
  if (utterances.empty()) throw InsufficientDataError("no utterances to fit");
  if (opts.n_states < 1 || opts.n_mix < 1) throw ArgumentError("bad HMM fit options");
  const int S = opts.n_states;
  const int dim = utterances[0].Dim();
  for (const auto& u : utterances) {
    if (u.Dim() != dim) throw ArgumentError("utterance dims disagree");
    if (u.NumFrames() < S)
      throw TooShortError("utterance '" + u.utterance_id + "' has " +
                          std::to_string(u.NumFrames()) + " frames, fewer than " +
                          std::to_string(S) + " states");
  }

  std::vector<std::vector<int>> alignments;
  alignments.reserve(utterances.size());
  for (const auto& u : utterances) alignments.push_back(UniformSegmentation(u.NumFrames(), S));

  HmmFitResult result;
  HmmModel model;
  model.emissions.resize(S);
  bool have_model = false;

  for (int round = 0; round < opts.max_iter; ++round) {
    // Emission fits on the frames each state currently owns. A state that
    // lost all its frames keeps its previous GMM.
    HmmModel next = model;
    for (int s = 0; s < S; ++s) {
      int n_frames = 0;
      for (size_t u = 0; u < utterances.size(); ++u)
        for (int t = 0; t < utterances[u].NumFrames(); ++t)
          if (alignments[u][t] == s) ++n_frames;
      if (n_frames == 0) continue;
      Matrix state_data(n_frames, dim);
      int row = 0;
      for (size_t u = 0; u < utterances.size(); ++u)
        for (int t = 0; t < utterances[u].NumFrames(); ++t)
          if (alignments[u][t] == s) {
            for (int d = 0; d < dim; ++d) state_data(row, d) = utterances[u].values(t, d);
            ++row;
          }
      int k = std::min(opts.n_mix, n_frames);
      if (!have_model || next.emissions[s].NumComponents() != k) {
        next.emissions[s] =
            FitGmm(state_data, k, opts.gmm, DeriveSeed(seed, round * 1000 + s)).model;
      } else {
        next.emissions[s] = FitGmmFrom(next.emissions[s], state_data, opts.gmm).model;
      }
    }
    next.transitions = TransitionsFromAlignments(alignments, S);

    // Re-align everything under the new model.
    std::vector<std::vector<int>> new_alignments(utterances.size());
    double total_ll = 0.0;
    for (size_t u = 0; u < utterances.size(); ++u) {
      ViterbiResult vr = Viterbi(next, utterances[u]);
      total_ll += vr.log_likelihood;
      new_alignments[u] = std::move(vr.path);
    }

    if (!result.aligned_ll_history.empty() && total_ll < result.aligned_ll_history.back())
      break;  // keep the previous, better model

    model = std::move(next);
    have_model = true;
    result.aligned_ll_history.push_back(total_ll);
    result.iterations = round + 1;
    bool stable = (new_alignments == alignments);
    alignments = std::move(new_alignments);
    if (stable) break;
  }

  result.model = std::move(model);
  return result;
}

}  // namespace svkit
