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

#include <string>
#include <utility>
#include <vector>

#include "lctlab/signal.hpp"

namespace lctlab::fixtures {

/// e^{-t^2/2}
SampledSignal gaussian(const Grid& grid);

/// C-infinity bump exp(-1/(1-x^2)), x=(t-center)/radius, support
/// [center-radius, center+radius]; scaled to unit peak.
SampledSignal smooth_bump(const Grid& grid, double center = 0.0,
                          double radius = 4.0);

/// (16 t^4 - 48 t^2 + 12) e^{-t^2/2} / 12 : a fourth-order
/// polynomial-times-Gaussian with sign changes and unit value at 0.
SampledSignal hermite4_gaussian(const Grid& grid);

/// The transform fixture set used across the verification experiments.
std::vector<std::pair<std::string, SampledSignal>> transform_set(
    const Grid& grid);

/// sqrt(t(1-t)) on [0,1]: Hoelder-1/2 cusps at both endpoints.
SampledSignal sqrt_cusp(const Grid& grid);

/// bump-windowed lacunary cosine sum  sum_k 2^{-k/2} cos(2^k pi t),
/// Hoelder-1/2 regular, supported in (0,1).
SampledSignal lacunary_cos(const Grid& grid, int levels = 12);

/// smooth bump times |t - 1/2|^{1/2}: a single interior Hoelder-1/2 cusp.
SampledSignal interior_cusp(const Grid& grid);

/// Hoelder-1/2 fixtures supported in (0,1) for the maximal-bound sweep.
std::vector<std::pair<std::string, SampledSignal>> holder_set(const Grid& grid);

}  // namespace lctlab::fixtures
