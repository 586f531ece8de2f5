// core/svkit/corpus/split.h

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

#ifndef SVKIT_CORPUS_SPLIT_H_
#define SVKIT_CORPUS_SPLIT_H_

#include <set>
#include <string>
#include <vector>

#include "svkit/base/rng.h"
#include "svkit/corpus/manifest.h"

namespace svkit {

/// A concrete development/evaluation partition of one manifest.
///
/// Development speakers train the background models on neutral speech of the
/// training sentences. Evaluation speakers supply enrollment data (their
/// neutral speech on the *training* sentences, keeping enrollment and test
/// text-independent and disjoint) and test data (their speech on the
/// evaluation sentences under every evaluation condition).
struct SplitSpec {
  std::set<std::string> train_speakers;
  std::set<std::string> eval_speakers;
  std::set<Condition> train_conditions = {Condition::kNeutral};
  std::set<Condition> eval_conditions;
  std::set<std::string> train_sentences;
  std::set<std::string> eval_sentences;
};

struct SplitPartitions {
  std::vector<UtteranceRecord> train;
  std::vector<UtteranceRecord> enroll;
  std::vector<UtteranceRecord> test;
};

/// Partitions manifest records per the spec. Throws ArgumentError if the
/// spec references speakers absent from the manifest or if the speaker sets
/// overlap.
SplitPartitions MakeSplits(const DatasetManifest& manifest, const SplitSpec& spec);

/// Counts-only description of a split, redrawn per experiment repeat.
struct SplitPlan {
  int n_train_speakers = 0;
  int n_eval_speakers = 0;
  int n_train_sentences = 0;
  int n_eval_sentences = 0;
  std::set<Condition> eval_conditions;  // empty = every condition in the manifest
};

/// Draws a concrete SplitSpec: speakers and sentences are shuffled with the
/// given rng and assigned to the train/eval sets per the plan's counts.
SplitSpec DrawSplitSpec(const DatasetManifest& manifest, const SplitPlan& plan, Rng& rng);

}  // namespace svkit

#endif  // SVKIT_CORPUS_SPLIT_H_
