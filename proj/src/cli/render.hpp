// Copyright 2026 The aerts-machines Authors
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

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace aerts::cli {

enum class Format { Table, Csv, Json };

std::optional<Format> format_from_name(const std::string& name);

using Cell = std::variant<std::int64_t, double, std::string>;

/// Output of one CLI command. `columns`/`rows` feed the table and CSV
/// renderers, `results` the JSON renderer.
struct Report {
  std::string command;
  nlohmann::json config = nlohmann::json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::json results = nlohmann::json::array();
  /// Summary lines appended below the table (table format only).
  std::vector<std::string> notes;
};

/// `value` rounded to 12 significant digits, for JSON output.
double round12(double value);

/// "%.12g" text of a double.
std::string format_number(double value);

std::string render(const Report& report, Format format);
std::string render_table(const Report& report);
std::string render_csv(const Report& report);
/// {"command", "config", "results"} with sorted keys, 2-space indent.
std::string render_json(const Report& report);

}  // namespace aerts::cli
