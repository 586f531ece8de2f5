// core/svkit/corpus/split.cc

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

#include "svkit/corpus/split.h"

#include <algorithm>

#include "svkit/base/error.h"

namespace svkit {

SplitPartitions MakeSplits(const DatasetManifest& manifest, const SplitSpec& spec) {
  for (const auto& s : spec.train_speakers)
    if (spec.eval_speakers.count(s))
      throw ArgumentError("speaker '" + s + "' is in both train and eval sets");

  std::set<std::string> known;
  for (const auto& rec : manifest.records) known.insert(rec.speaker_id);
  for (const auto& s : spec.train_speakers)
    if (!known.count(s)) throw ArgumentError("unknown train speaker '" + s + "'");
  for (const auto& s : spec.eval_speakers)
    if (!known.count(s)) throw ArgumentError("unknown eval speaker '" + s + "'");

  SplitPartitions out;
  for (const auto& rec : manifest.records) {
    const bool train_speaker = spec.train_speakers.count(rec.speaker_id) > 0;
    const bool eval_speaker = spec.eval_speakers.count(rec.speaker_id) > 0;
    if (train_speaker && spec.train_conditions.count(rec.condition) &&
        spec.train_sentences.count(rec.sentence_id)) {
      out.train.push_back(rec);
    } else if (eval_speaker && rec.condition == Condition::kNeutral &&
               spec.train_sentences.count(rec.sentence_id)) {
      out.enroll.push_back(rec);
    } else if (eval_speaker && spec.eval_conditions.count(rec.condition) &&
               spec.eval_sentences.count(rec.sentence_id)) {
      out.test.push_back(rec);
    }
  }
  return out;
}

SplitSpec DrawSplitSpec(const DatasetManifest& manifest, const SplitPlan& plan, Rng& rng) {
  std::vector<std::string> speakers = manifest.Speakers();
  std::vector<std::string> sentences = manifest.Sentences();
  if (plan.n_train_speakers + plan.n_eval_speakers > static_cast<int>(speakers.size()))
    throw ArgumentError("split plan wants more speakers than the manifest has");
  if (plan.n_train_sentences + plan.n_eval_sentences > static_cast<int>(sentences.size()))
    throw ArgumentError("split plan wants more sentences than the manifest has");
  if (plan.n_train_speakers < 2 || plan.n_eval_speakers < 2)
    throw ArgumentError("split plan needs at least 2 train and 2 eval speakers");
  if (plan.n_train_sentences < 1 || plan.n_eval_sentences < 1)
    throw ArgumentError("split plan needs at least 1 sentence per side");

  rng.Shuffle(speakers);
  rng.Shuffle(sentences);

  SplitSpec spec;
  for (int i = 0; i < plan.n_train_speakers; ++i) spec.train_speakers.insert(speakers[i]);
  for (int i = 0; i < plan.n_eval_speakers; ++i)
    spec.eval_speakers.insert(speakers[plan.n_train_speakers + i]);
  for (int i = 0; i < plan.n_train_sentences; ++i) spec.train_sentences.insert(sentences[i]);
  for (int i = 0; i < plan.n_eval_sentences; ++i)
    spec.eval_sentences.insert(sentences[plan.n_train_sentences + i]);

  if (plan.eval_conditions.empty()) {
    for (Condition c : manifest.Conditions()) spec.eval_conditions.insert(c);
  } else {
    spec.eval_conditions = plan.eval_conditions;
  }
  return spec;
}

}  // namespace svkit
