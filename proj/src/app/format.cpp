// Copyright 2026 The Holonomy Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "holo/app/format.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace holo::app {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<double> values, bool flagged) {
  if (values.size() != header_.size()) throw std::invalid_argument("CSV row width does not match header");
  rows_.push_back(std::move(values));
  flags_.push_back(flagged);
}

bool CsvTable::has_flags() const { return std::find(flags_.begin(), flags_.end(), true) != flags_.end(); }

std::string CsvTable::str() const {
  const bool flag_column = has_flags();
  std::string out;
  for (std::size_t c = 0; c < header_.size(); ++c) {
    if (c) out += ',';
    out += header_[c];
  }
  if (flag_column) out += ",flag";
  out += '\n';
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) out += ',';
      out += format_number(rows_[r][c]);
    }
    if (flag_column) out += flags_[r] ? ",1" : ",0";
    out += '\n';
  }
  return out;
}

}  // namespace holo::app
