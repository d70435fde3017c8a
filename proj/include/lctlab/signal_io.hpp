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

#include <iosfwd>
#include <string>

#include "lctlab/signal.hpp"
#include "lctlab/subgroup.hpp"

namespace lctlab {

/// Signal JSON: {"grid": {"T": <real>, "N": <int>}, "values": [[re, im], ...]}.
SampledSignal read_signal_json(std::istream& in);
SampledSignal read_signal_json_file(const std::string& path);
void write_signal_json(const SampledSignal& f, std::ostream& out);

/// CSV export: header "t,re,im" then one row per sample, 17 significant
/// digits.
void write_signal_csv(const SampledSignal& f, std::ostream& out);

/// Subgroup JSON: {"family": "I"|"II"|"III", "omega": .., "lambda": ..,
/// "gamma": ..}; omega defaults to 1, gamma to 0.
SubgroupSpec parse_subgroup_spec(const std::string& json_text);
std::string subgroup_spec_json(const SubgroupSpec& spec);

}  // namespace lctlab
