// Copyright 2026 The contamdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CONTAMDP_HARNESS_CSV_H_
#define CONTAMDP_HARNESS_CSV_H_

#include <fstream>
#include <string>
#include <utility>
#include <vector>

namespace contamdp {

// Shortest round-trippable decimal form of v.
std::string FormatDouble(double v);

// Writes `# key: value` comment lines, a header row, then data rows.
class CsvWriter {
 public:
  CsvWriter(const std::string& path,
            const std::vector<std::pair<std::string, std::string>>& comments,
            const std::vector<std::string>& columns);

  void Row(const std::vector<std::string>& fields);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::ofstream out_;
  std::size_t columns_;
};

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  int Column(const std::string& name) const;  // -1 when absent
};

// Reads a file written by CsvWriter, skipping comment lines.
CsvTable ReadCsv(const std::string& path);

}  // namespace contamdp

#endif  // CONTAMDP_HARNESS_CSV_H_
