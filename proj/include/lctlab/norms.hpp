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

#include <variant>

#include "lctlab/signal.hpp"

namespace lctlab {

struct L2Tag {};
struct WeightedL2 {
  double r;  // weight (1+t^2)^r, r >= 0
};
struct Sobolev {
  double s;  // multiplier (1+xi^2)^{s/2} on the spectrum, s >= 0
};
struct HolderSeminorm {
  double s;  // Hoelder order, s in (0, 1]
};

using NormSpec = std::variant<L2Tag, WeightedL2, Sobolev, HolderSeminorm>;

/// Trapezoid approximation of the requested (semi)norm on the truncated
/// domain. The Hoelder seminorm samples pairs at dyadic separations only,
/// so it is a lower bound on the exact discrete sup.
double norm(const SampledSignal& f, const NormSpec& spec);

double l2_norm(const SampledSignal& f);

/// || f - g ||_{L2}; grids must match.
double l2_distance(const SampledSignal& f, const SampledSignal& g);

}  // namespace lctlab
