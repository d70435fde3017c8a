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

#include <functional>
#include <stdexcept>
#include <string>

namespace lctlab {

/// Input failed validation (bad grid, malformed config, ...).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A transform would undersample its integrand ("aliasing risk").
class AliasingError : public std::runtime_error {
 public:
  explicit AliasingError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Parameters at or too close to a pole / non-composable configuration.
class DegenerateParameterError : public std::runtime_error {
 public:
  explicit DegenerateParameterError(const std::string& msg)
      : std::runtime_error(msg) {}
};

/// Grid cannot resolve the requested construction.
class ResolutionError : public std::runtime_error {
 public:
  explicit ResolutionError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Non-fatal diagnostics are routed through this hook so the CLI can tee
/// them into a run log. Default sink writes to stderr.
using WarningSink = std::function<void(const std::string&)>;

void set_warning_sink(WarningSink sink);
void emit_warning(const std::string& msg);

}  // namespace lctlab
