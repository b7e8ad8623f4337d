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

#include "contamdp/harness/csv.h"

#include <charconv>
#include <cmath>
#include <sstream>

#include "contamdp/error.h"

namespace contamdp {
namespace {

std::vector<std::string> Split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

std::string FormatDouble(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(
    const std::string& path,
    const std::vector<std::pair<std::string, std::string>>& comments,
    const std::vector<std::string>& columns)
    : path_(path), out_(path, std::ios::binary), columns_(columns.size()) {
  if (!out_) throw Error(ErrorKind::kConfig, "cannot write " + path);
  for (const auto& [key, value] : comments) {
    out_ << "# " << key << ": " << value << '\n';
  }
  for (std::size_t i = 0; i < columns.size(); ++i) {
    out_ << (i ? "," : "") << columns[i];
  }
  out_ << '\n';
}

void CsvWriter::Row(const std::vector<std::string>& fields) {
  if (fields.size() != columns_) {
    throw Error(ErrorKind::kNumerical, "CSV row width mismatch in " + path_);
  }
  for (const auto& field : fields) {
    if (field.find_first_of(",\n") != std::string::npos) {
      throw Error(ErrorKind::kNumerical, "CSV field contains a separator");
    }
  }
  for (std::size_t i = 0; i < fields.size(); ++i) {
    out_ << (i ? "," : "") << fields[i];
  }
  out_ << '\n';
  out_.flush();
}

int CsvTable::Column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return static_cast<int>(i);
  }
  return -1;
}

CsvTable ReadCsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kConfig, "cannot read " + path);
  CsvTable table;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      table.columns = Split(line);
      header = false;
    } else {
      table.rows.push_back(Split(line));
    }
  }
  if (header) throw Error(ErrorKind::kConfig, path + " has no header row");
  return table;
}

}  // namespace contamdp
