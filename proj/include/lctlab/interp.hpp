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

#include <cmath>

#include "lctlab/signal.hpp"

namespace lctlab {

/// Catmull-Rom cubic interpolation on the signal's uniform grid; returns 0
/// outside [t_1, t_{N-2}]. Fourth-order accurate for smooth samples.
inline cplx interp_cubic(const SampledSignal& s, double x) {
  const double dt = s.grid.spacing();
  const double pos = (x + s.grid.half_width) / dt;
  const double fl = std::floor(pos);
  const long j = static_cast<long>(fl);
  const long n = static_cast<long>(s.grid.count);
  if (j < 1 || j + 2 >= n) return {0.0, 0.0};
  const double x1 = pos - fl;
  const cplx p0 = s.values[j - 1];
  const cplx p1 = s.values[j];
  const cplx p2 = s.values[j + 1];
  const cplx p3 = s.values[j + 2];
  return p1 + 0.5 * x1 *
                  (p2 - p0 +
                   x1 * (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3 +
                         x1 * (3.0 * (p1 - p2) + p3 - p0)));
}

}  // namespace lctlab
