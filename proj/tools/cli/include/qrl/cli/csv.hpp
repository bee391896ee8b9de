// Copyright 2026 The qrl-thermal Authors
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

// Comma-separated output with a leading '#' parameter block. Floats are
// written in shortest round-trip form, so parsing a file reproduces the
// in-memory doubles exactly.

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace qrl::cli {

std::string format_double(double value);

struct CsvTable {
  // (key, value) pairs emitted as "# key=value" lines, in order.
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void write(std::ostream& out) const;
  std::string to_string() const;

  // Inverse of write(). Throws std::runtime_error on malformed input.
  static CsvTable parse(std::istream& in);
  static CsvTable parse(const std::string& text);

  // Index of `name` in columns; throws std::out_of_range if absent.
  std::size_t column_index(const std::string& name) const;
  std::vector<double> column(const std::string& name) const;
  const std::string* find_metadata(const std::string& key) const;
};

}  // namespace qrl::cli
