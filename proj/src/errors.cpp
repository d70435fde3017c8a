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

#include "lctlab/errors.hpp"

#include <iostream>
#include <utility>

namespace lctlab {

namespace {
WarningSink g_sink = [](const std::string& msg) {
  std::clog << "[warn] " << msg << '\n';
};
}  // namespace

void set_warning_sink(WarningSink sink) { g_sink = std::move(sink); }

void emit_warning(const std::string& msg) {
  if (g_sink) g_sink(msg);
}

}  // namespace lctlab
