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

#include <cstddef>
#include <vector>

namespace lctlab {

/// Uniform grid t_j = -T + j*dt, j = 0..N-1, covering [-T, T).
/// N must be a power of two (>= 8) so the FFT path applies.
struct Grid {
  double half_width = 0.0;  // T
  std::size_t count = 0;    // N

  double spacing() const { return 2.0 * half_width / static_cast<double>(count); }
  double point(std::size_t j) const {
    return -half_width + static_cast<double>(j) * spacing();
  }
  std::vector<double> points() const;

  /// Frequency grid matching the unitary continuous-convention FFT:
  /// spacing 2*pi/(N*dt), half-width pi/dt, same sample count.
  Grid reciprocal() const;

  /// Nyquist limit pi/dt: largest phase rate representable on this grid.
  double nyquist() const;

  friend bool operator==(const Grid&, const Grid&) = default;
};

/// Validates T > 0, N >= 8 and N a power of two; throws ConfigError otherwise.
Grid make_grid(double half_width, std::size_t count);

bool is_power_of_two(std::size_t n);

}  // namespace lctlab
