// Copyright 2026 lctlab authors
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

#include "lctlab/report.hpp"

#include <cstdio>
#include <sstream>

#include "lctlab/errors.hpp"

namespace lctlab {

void ExperimentReport::add_row(std::vector<double> row) {
  if (row.size() != columns.size()) {
    throw ConfigError("report row width does not match declared columns");
  }
  rows.push_back(std::move(row));
}

std::string format_float(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_csv(const ExperimentReport& r, std::ostream& out) {
  out << "# report: " << r.name << "\n";
  for (const std::string& note : r.notes) out << "# note: " << note << "\n";
  for (std::size_t c = 0; c < r.columns.size(); ++c) {
    out << (c ? "," : "") << r.columns[c];
  }
  out << "\n";
  for (const auto& row : r.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c ? "," : "") << format_float(row[c]);
    }
    out << "\n";
  }
}

std::string to_csv(const ExperimentReport& r) {
  std::ostringstream os;
  write_csv(r, os);
  return os.str();
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

void write_json_sidecar(const ExperimentReport& r, std::ostream& out) {
  out << "{\n  \"report\": \"" << json_escape(r.name) << "\",\n";
  out << "  \"metrics\": {";
  bool first = true;
  for (const auto& [k, v] : r.metrics) {
    out << (first ? "" : ",") << "\n    \"" << json_escape(k)
        << "\": " << format_float(v);
    first = false;
  }
  out << (first ? "" : "\n  ") << "},\n  \"flags\": {";
  first = true;
  for (const auto& [k, v] : r.flags) {
    out << (first ? "" : ",") << "\n    \"" << json_escape(k)
        << "\": " << (v ? "true" : "false");
    first = false;
  }
  out << (first ? "" : "\n  ") << "},\n  \"notes\": [";
  first = true;
  for (const auto& n : r.notes) {
    out << (first ? "" : ",") << "\n    \"" << json_escape(n) << "\"";
    first = false;
  }
  out << (first ? "" : "\n  ") << "],\n  \"config\": "
      << (r.config_echo.empty() ? "null" : r.config_echo) << "\n}\n";
}

void write_plot_data(const ExperimentReport& r, const std::string& x_column,
                     const std::string& y_column, std::ostream& out) {
  std::size_t xi = r.columns.size(), yi = r.columns.size();
  for (std::size_t c = 0; c < r.columns.size(); ++c) {
    if (r.columns[c] == x_column) xi = c;
    if (r.columns[c] == y_column) yi = c;
  }
  if (xi == r.columns.size() || yi == r.columns.size()) {
    throw ConfigError("plot columns not present in report");
  }
  for (const auto& row : r.rows) {
    out << format_float(row[xi]) << " " << format_float(row[yi]) << "\n";
  }
}

}  // namespace lctlab
