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

#include "lctlab/grid.hpp"

#include <cmath>
#include <string>

#include "lctlab/errors.hpp"

namespace lctlab {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::vector<double> Grid::points() const {
  std::vector<double> out(count);
  for (std::size_t j = 0; j < count; ++j) out[j] = point(j);
  return out;
}

double Grid::nyquist() const { return M_PI / spacing(); }

Grid Grid::reciprocal() const {
  // spacing 2 pi/(N dt) over N samples gives half-width pi/dt.
  return Grid{nyquist(), count};
}

Grid make_grid(double half_width, std::size_t count) {
  if (!(half_width > 0.0)) {
    throw ConfigError("grid half-width must be positive, got " +
                      std::to_string(half_width));
  }
  if (count < 8 || !is_power_of_two(count)) {
    throw ConfigError("grid size must be a power of two >= 8, got " +
                      std::to_string(count));
  }
  return Grid{half_width, count};
}

}  // namespace lctlab
