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

#pragma once

// Deterministic text output: CSV tables with 12 significant digits and
// '\n' line endings.

#include <string>
#include <vector>

namespace holo::app {

/// "%.12g", with "nan" / "inf" / "-inf" for non-finite values and -0 printed as 0.
std::string format_number(double v);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  void add_row(std::vector<double> values, bool flagged = false);

  std::size_t rows() const { return rows_.size(); }
  bool has_flags() const;

  /// Header plus rows. A trailing `flag` column (1 = flagged) is appended
  /// only when at least one row is flagged.
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<double>> rows_;
  std::vector<bool> flags_;
};

}  // namespace holo::app
