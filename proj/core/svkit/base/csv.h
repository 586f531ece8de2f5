// core/svkit/base/csv.h

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

#ifndef SVKIT_BASE_CSV_H_
#define SVKIT_BASE_CSV_H_

#include <filesystem>
#include <string>
#include <vector>

namespace svkit {

// All toolkit CSVs are plain comma-separated UTF-8 with a header line and no
// quoting; fields must not contain commas.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int ColumnIndex(const std::string& name) const;  // -1 if absent
};

CsvTable ReadCsvFile(const std::filesystem::path& path);
CsvTable ParseCsv(const std::string& text);
std::string RenderCsv(const CsvTable& table);
void WriteCsvFile(const std::filesystem::path& path, const CsvTable& table);

}  // namespace svkit

#endif  // SVKIT_BASE_CSV_H_
