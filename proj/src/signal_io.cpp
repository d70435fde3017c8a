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

#include "lctlab/signal_io.hpp"

#include <fstream>
#include <ostream>

#include <json.hpp>

#include "lctlab/errors.hpp"
#include "lctlab/report.hpp"

namespace lctlab {

using nlohmann::json;

SampledSignal read_signal_json(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("signal JSON parse failure: ") + e.what());
  }
  try {
    const double T = doc.at("grid").at("T").get<double>();
    const std::size_t N = doc.at("grid").at("N").get<std::size_t>();
    const Grid grid = make_grid(T, N);
    std::vector<cplx> values;
    values.reserve(doc.at("values").size());
    for (const auto& pair : doc.at("values")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw ConfigError("signal values must be [re, im] pairs");
      }
      values.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return make_signal(grid, std::move(values));
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed signal document: ") + e.what());
  }
}

SampledSignal read_signal_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open signal file: " + path);
  return read_signal_json(in);
}

void write_signal_json(const SampledSignal& f, std::ostream& out) {
  json doc;
  doc["grid"]["T"] = f.grid.half_width;
  doc["grid"]["N"] = f.grid.count;
  json vals = json::array();
  for (const cplx& v : f.values) {
    vals.push_back(json::array({v.real(), v.imag()}));
  }
  doc["values"] = std::move(vals);
  out << doc.dump(2) << "\n";
}

void write_signal_csv(const SampledSignal& f, std::ostream& out) {
  out << "t,re,im\n";
  for (std::size_t j = 0; j < f.grid.count; ++j) {
    out << format_float(f.grid.point(j)) << ","
        << format_float(f.values[j].real()) << ","
        << format_float(f.values[j].imag()) << "\n";
  }
}

SubgroupSpec parse_subgroup_spec(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("subgroup JSON parse failure: ") + e.what());
  }
  SubgroupSpec spec;
  const std::string fam = doc.value("family", "");
  if (fam == "I") {
    spec.family = Family::TrigI;
  } else if (fam == "II") {
    spec.family = Family::ParabolicII;
  } else if (fam == "III") {
    spec.family = Family::HyperbolicIII;
  } else {
    throw ConfigError("subgroup family must be \"I\", \"II\" or \"III\"");
  }
  spec.omega = doc.value("omega", 1.0);
  spec.lambda = doc.value("lambda", 1.0);
  spec.gamma = doc.value("gamma", 0.0);
  validate(spec);
  return spec;
}

std::string subgroup_spec_json(const SubgroupSpec& spec) {
  json doc;
  switch (spec.family) {
    case Family::TrigI: doc["family"] = "I"; break;
    case Family::ParabolicII: doc["family"] = "II"; break;
    case Family::HyperbolicIII: doc["family"] = "III"; break;
  }
  doc["omega"] = spec.omega;
  doc["lambda"] = spec.lambda;
  doc["gamma"] = spec.gamma;
  return doc.dump();
}

}  // namespace lctlab
