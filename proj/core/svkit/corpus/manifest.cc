// core/svkit/corpus/manifest.cc

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

#include "svkit/corpus/manifest.h"

#include <algorithm>
#include <array>
#include <set>

#include "svkit/base/csv.h"
#include "svkit/base/error.h"
#include "svkit/base/text.h"

namespace svkit {

namespace fs = std::filesystem;

namespace {

const std::array<std::string, kNumConditions> kConditionNames = {
    "neutral", "angry", "happy", "sad", "fear",
    "disgust", "slow",  "soft",  "lombard", "fast"};

bool IsAudioFile(const fs::path& p) {
  std::string ext = ToLower(p.extension().string());
  return ext == ".wav" || ext == ".svfc";
}

void CheckUniqueIdsAndFiles(const DatasetManifest& manifest) {
  std::set<std::string> ids;
  for (const auto& rec : manifest.records) {
    if (!ids.insert(rec.utterance_id).second)
      throw FormatError("duplicate utterance_id: " + rec.utterance_id);
    if (rec.speaker_id.empty())
      throw FormatError("empty speaker_id for utterance " + rec.utterance_id);
    if (!fs::exists(rec.path))
      throw IoError("manifest references missing file: " + rec.path.string());
  }
}

ManifestBuildResult BuildFromCsv(const fs::path& root) {
  fs::path csv_path = root;
  if (fs::is_directory(root)) csv_path = root / "manifest.csv";
  CsvTable table = ReadCsvFile(csv_path);

  const std::vector<std::string> expected = {"utterance_id", "speaker_id", "condition",
                                             "sentence",     "repetition", "path"};
  if (table.header != expected)
    throw FormatError(csv_path.string() +
                      ": manifest header must be utterance_id,speaker_id,condition,"
                      "sentence,repetition,path");

  ManifestBuildResult result;
  result.manifest.name = csv_path.stem().string();
  const fs::path base = csv_path.parent_path();
  for (const auto& row : table.rows) {
    UtteranceRecord rec;
    rec.utterance_id = row[0];
    rec.speaker_id = row[1];
    auto cond = ParseCondition(row[2]);
    if (!cond) throw FormatError(csv_path.string() + ": unknown condition '" + row[2] + "'");
    rec.condition = *cond;
    rec.sentence_id = row[3];
    rec.repetition = ParseInt(row[4]);
    fs::path p = row[5];
    rec.path = p.is_absolute() ? p : base / p;
    result.manifest.records.push_back(std::move(rec));
  }
  if (result.manifest.records.empty())
    throw EmptyManifestError(csv_path.string() + ": manifest has no records");
  CheckUniqueIdsAndFiles(result.manifest);
  return result;
}

// RAVDESS: 03-01-06-01-02-01-12.wav
//   modality - vocal channel - emotion - intensity - statement - repetition - actor
std::optional<UtteranceRecord> DecodeRavdessName(const fs::path& file) {
  static const std::array<std::pair<int, Condition>, 6> kEmotionCodes = {{
      {1, Condition::kNeutral},
      {3, Condition::kHappy},
      {4, Condition::kSad},
      {5, Condition::kAngry},
      {6, Condition::kFear},
      {7, Condition::kDisgust},
  }};
  std::vector<std::string> fields = Split(file.stem().string(), '-');
  if (fields.size() != 7) return std::nullopt;
  std::array<int, 7> v{};
  for (int i = 0; i < 7; ++i) {
    try {
      v[i] = ParseInt(fields[i]);
    } catch (const FormatError&) {
      return std::nullopt;
    }
  }
  Condition cond;
  bool known = false;
  for (const auto& [code, c] : kEmotionCodes) {
    if (v[2] == code) {
      cond = c;
      known = true;
      break;
    }
  }
  if (!known) return std::nullopt;  // calm / surprised are out of scope

  UtteranceRecord rec;
  rec.utterance_id = file.stem().string();
  rec.speaker_id = "actor" + (v[6] < 10 ? "0" + std::to_string(v[6]) : std::to_string(v[6]));
  rec.condition = cond;
  rec.sentence_id = "s" + std::to_string(v[4]);
  // Intensity and repetition jointly index the takes of one (emotion,
  // statement) cell; fold them so repetitions stay distinct.
  rec.repetition = (v[3] - 1) * 2 + v[5];
  rec.path = file;
  return rec;
}

ManifestBuildResult BuildFromRavdess(const fs::path& root) {
  ManifestBuildResult result;
  result.manifest.name = root.filename().string();
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (entry.is_regular_file() && ToLower(entry.path().extension().string()) == ".wav")
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& file : files) {
    auto rec = DecodeRavdessName(file);
    if (rec)
      result.manifest.records.push_back(std::move(*rec));
    else
      ++result.skipped;
  }
  if (result.manifest.records.empty())
    throw EmptyManifestError(root.string() + ": no decodable audio files");
  CheckUniqueIdsAndFiles(result.manifest);
  return result;
}

ManifestBuildResult BuildFromSusasLayout(const fs::path& root) {
  ManifestBuildResult result;
  result.manifest.name = root.filename().string();
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (entry.is_regular_file() && IsAudioFile(entry.path())) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& file : files) {
    fs::path style_dir = file.parent_path();
    fs::path speaker_dir = style_dir.parent_path();
    auto cond = ParseCondition(ToLower(style_dir.filename().string()));
    if (!cond || speaker_dir == speaker_dir.root_path() || speaker_dir.filename().empty()) {
      ++result.skipped;
      continue;
    }
    std::string stem = file.stem().string();
    // Trailing digits are the repetition index: "brake2" -> ("brake", 2).
    size_t cut = stem.size();
    while (cut > 1 && std::isdigit(static_cast<unsigned char>(stem[cut - 1]))) --cut;
    int repetition = 1;
    if (cut < stem.size()) repetition = ParseInt(stem.substr(cut));

    UtteranceRecord rec;
    rec.speaker_id = speaker_dir.filename().string();
    rec.condition = *cond;
    rec.sentence_id = stem.substr(0, cut);
    rec.repetition = repetition;
    rec.path = file;
    rec.utterance_id =
        rec.speaker_id + "_" + style_dir.filename().string() + "_" + stem;
    result.manifest.records.push_back(std::move(rec));
  }
  if (result.manifest.records.empty())
    throw EmptyManifestError(root.string() + ": no decodable audio files");
  CheckUniqueIdsAndFiles(result.manifest);
  return result;
}

}  // namespace

const std::string& ConditionName(Condition c) {
  return kConditionNames[static_cast<int>(c)];
}

std::optional<Condition> ParseCondition(const std::string& name) {
  for (int i = 0; i < kNumConditions; ++i)
    if (kConditionNames[i] == name) return static_cast<Condition>(i);
  return std::nullopt;
}

std::optional<ManifestSchema> ParseManifestSchema(const std::string& name) {
  if (name == "generic_csv") return ManifestSchema::kGenericCsv;
  if (name == "ravdess_filename") return ManifestSchema::kRavdessFilename;
  if (name == "susas_layout") return ManifestSchema::kSusasLayout;
  return std::nullopt;
}

std::vector<std::string> DatasetManifest::Speakers() const {
  std::set<std::string> s;
  for (const auto& rec : records) s.insert(rec.speaker_id);
  return {s.begin(), s.end()};
}

std::vector<std::string> DatasetManifest::Sentences() const {
  std::set<std::string> s;
  for (const auto& rec : records) s.insert(rec.sentence_id);
  return {s.begin(), s.end()};
}

std::vector<Condition> DatasetManifest::Conditions() const {
  std::set<Condition> s;
  for (const auto& rec : records) s.insert(rec.condition);
  return {s.begin(), s.end()};
}

ManifestBuildResult BuildManifest(const fs::path& root, ManifestSchema schema) {
  if (!fs::exists(root)) throw IoError("manifest root does not exist: " + root.string());
  switch (schema) {
    case ManifestSchema::kGenericCsv:
      return BuildFromCsv(root);
    case ManifestSchema::kRavdessFilename:
      return BuildFromRavdess(root);
    case ManifestSchema::kSusasLayout:
      return BuildFromSusasLayout(root);
  }
  throw ArgumentError("unknown manifest schema");
}

void WriteManifestCsv(const fs::path& path, const DatasetManifest& manifest) {
  CsvTable table;
  table.header = {"utterance_id", "speaker_id", "condition", "sentence", "repetition", "path"};
  for (const auto& rec : manifest.records) {
    table.rows.push_back({rec.utterance_id, rec.speaker_id, ConditionName(rec.condition),
                          rec.sentence_id, std::to_string(rec.repetition),
                          rec.path.string()});
  }
  WriteCsvFile(path, table);
}

}  // namespace svkit
