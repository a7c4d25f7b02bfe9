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

#include "cli/render.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace aerts::cli {

std::optional<Format> format_from_name(const std::string& name) {
  if (name == "table") return Format::Table;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  return std::nullopt;
}

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

double round12(double value) { return std::strtod(format_number(value).c_str(), nullptr); }

namespace {

std::string cell_text(const Cell& cell) {
  struct Text {
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(const std::string& v) const { return v; }
  };
  return std::visit(Text{}, cell);
}

}  // namespace

std::string render_table(const Report& report) {
  std::vector<std::size_t> width(report.columns.size(), 0);
  for (std::size_t c = 0; c < report.columns.size(); ++c) width[c] = report.columns[c].size();
  std::vector<std::vector<std::string>> text;
  for (const auto& row : report.rows) {
    auto& line = text.emplace_back();
    for (std::size_t c = 0; c < row.size(); ++c) {
      line.push_back(cell_text(row[c]));
      width[c] = std::max(width[c], line.back().size());
    }
  }

  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) os << "  ";
      os << std::string(width[c] - cells[c].size(), ' ') << cells[c];
    }
    os << '\n';
  };
  emit(report.columns);
  std::vector<std::string> rule;
  for (std::size_t w : width) rule.emplace_back(w, '-');
  emit(rule);
  for (const auto& line : text) emit(line);
  for (const auto& note : report.notes) os << note << '\n';
  return os.str();
}

std::string render_csv(const Report& report) {
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) os << (c ? "," : "") << cells[c];
    os << '\n';
  };
  emit(report.columns);
  for (const auto& row : report.rows) {
    std::vector<std::string> cells;
    for (const Cell& cell : row) cells.push_back(cell_text(cell));
    emit(cells);
  }
  return os.str();
}

std::string render_json(const Report& report) {
  nlohmann::json doc = nlohmann::json::object();
  doc["command"] = report.command;
  doc["config"] = report.config;
  doc["results"] = report.results;
  return doc.dump(2) + "\n";
}

std::string render(const Report& report, Format format) {
  switch (format) {
    case Format::Csv:
      return render_csv(report);
    case Format::Json:
      return render_json(report);
    case Format::Table:
      break;
  }
  return render_table(report);
}

}  // namespace aerts::cli
