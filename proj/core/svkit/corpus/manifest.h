// core/svkit/corpus/manifest.h

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

#ifndef SVKIT_CORPUS_MANIFEST_H_
#define SVKIT_CORPUS_MANIFEST_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace svkit {

/// Recording condition: the six emotions plus the four extra stressful
/// speaking styles (angry and neutral are shared between the two sets).
enum class Condition {
  kNeutral,
  kAngry,
  kHappy,
  kSad,
  kFear,
  kDisgust,
  kSlow,
  kSoft,
  kLombard,
  kFast,
};

constexpr int kNumConditions = 10;

const std::string& ConditionName(Condition c);
std::optional<Condition> ParseCondition(const std::string& name);

struct UtteranceRecord {
  std::string utterance_id;
  std::string speaker_id;
  Condition condition = Condition::kNeutral;
  std::string sentence_id;
  int repetition = 1;
  std::filesystem::path path;
};

struct DatasetManifest {
  std::string name;
  std::vector<UtteranceRecord> records;

  /// Distinct speaker ids in sorted order.
  std::vector<std::string> Speakers() const;
  /// Distinct sentence ids in sorted order.
  std::vector<std::string> Sentences() const;
  /// Distinct conditions, in enum order.
  std::vector<Condition> Conditions() const;
};

enum class ManifestSchema { kGenericCsv, kRavdessFilename, kSusasLayout };

std::optional<ManifestSchema> ParseManifestSchema(const std::string& name);

struct ManifestBuildResult {
  DatasetManifest manifest;
  int skipped = 0;  // files present but undecodable under the schema
};

/// Scans `root` and builds one record per discovered audio file.
///
/// Schemas:
///  - generic_csv: `root` is a CSV file (or a directory holding
///    manifest.csv) with header
///    utterance_id,speaker_id,condition,sentence,repetition,path.
///    Relative paths resolve against the CSV's directory. Referenced files
///    must exist.
///  - ravdess_filename: recursive *.wav scan; fields decoded from the
///    7-part numeric RAVDESS filename (modality-channel-emotion-intensity-
///    statement-repetition-actor). Emotions outside the six supported ones
///    and undecodable names are skipped and counted.
///  - susas_layout: expects root/<speaker>/<style>/<word>.wav where <style>
///    is a condition name; repetitions are numeric filename suffixes
///    (word.wav, word2.wav, ...).
///
/// Throws EmptyManifestError if nothing was ingested.
ManifestBuildResult BuildManifest(const std::filesystem::path& root, ManifestSchema schema);

/// Serializes a manifest to the generic CSV schema. Paths are written as
/// given in the records.
void WriteManifestCsv(const std::filesystem::path& path, const DatasetManifest& manifest);

}  // namespace svkit

#endif  // SVKIT_CORPUS_MANIFEST_H_
