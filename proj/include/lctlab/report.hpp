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

#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace lctlab {

/// Tabular experiment record. Maps are ordered so serialization is
/// deterministic; re-running the same config byte-reproduces the CSV.
struct ExperimentReport {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::map<std::string, double> metrics;  // fitted exponents, norms, ...
  std::map<std::string, bool> flags;      // pass/fail summary
  std::string config_echo;                // JSON text, written verbatim
  std::vector<std::string> notes;         // recorded substitutions etc.

  void add_row(std::vector<double> row);
};

/// Shortest decimal form that round-trips a double (17 significant digits,
/// '.' decimal point).
std::string format_float(double x);

/// Header block ('#' lines: name, notes), one column-header line, then one
/// line per row.
void write_csv(const ExperimentReport& r, std::ostream& out);
std::string to_csv(const ExperimentReport& r);

/// Sidecar with config echo, metrics, flags and notes.
void write_json_sidecar(const ExperimentReport& r, std::ostream& out);

/// Plain two-column plot data for one (x_column, y_column) pair.
void write_plot_data(const ExperimentReport& r, const std::string& x_column,
                     const std::string& y_column, std::ostream& out);

}  // namespace lctlab
