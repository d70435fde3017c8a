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

#include "lctlab/norms.hpp"

#include <algorithm>
#include <cmath>

#include "lctlab/errors.hpp"
#include "lctlab/fourier.hpp"

namespace lctlab {

namespace {

double trapezoid_weight(std::size_t j, std::size_t n, double dt) {
  return (j == 0 || j + 1 == n) ? 0.5 * dt : dt;
}

double weighted_l2(const SampledSignal& f, double r) {
  const std::size_t n = f.grid.count;
  const double dt = f.grid.spacing();
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double t = f.grid.point(j);
    const double w = (r == 0.0) ? 1.0 : std::pow(1.0 + t * t, r);
    acc += std::norm(f.values[j]) * w * trapezoid_weight(j, n, dt);
  }
  return std::sqrt(acc);
}

double sobolev(const SampledSignal& f, double s) {
  // spectrum-side multiplier (1+xi^2)^{s/2}; the transform is warn-only
  // here since the norm itself is what detects out-of-band content.
  AliasingPolicy lax;
  lax.error_threshold = 1.0;
  const SampledSignal fhat = fourier(f, lax);
  return weighted_l2(fhat, s);
}

// sup over dyadic separations m in {1, 2, 4, ...} of
// max_j |f_{j+m} - f_j| / (m dt)^s : a lower bound on the exact pair sup,
// O(N log N) instead of O(N^2).
double holder_seminorm(const SampledSignal& f, double s) {
  const std::size_t n = f.grid.count;
  const double dt = f.grid.spacing();
  double best = 0.0;
  for (std::size_t m = 1; m < n; m <<= 1) {
    double max_diff = 0.0;
    for (std::size_t j = 0; j + m < n; ++j) {
      max_diff = std::max(max_diff, std::abs(f.values[j + m] - f.values[j]));
    }
    const double h = static_cast<double>(m) * dt;
    best = std::max(best, max_diff / std::pow(h, s));
  }
  return best;
}

}  // namespace

double l2_norm(const SampledSignal& f) { return weighted_l2(f, 0.0); }

double l2_distance(const SampledSignal& f, const SampledSignal& g) {
  if (!(f.grid == g.grid)) {
    throw ConfigError("l2_distance requires matching grids");
  }
  const std::size_t n = f.grid.count;
  const double dt = f.grid.spacing();
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    acc += std::norm(f.values[j] - g.values[j]) * trapezoid_weight(j, n, dt);
  }
  return std::sqrt(acc);
}

double norm(const SampledSignal& f, const NormSpec& spec) {
  return std::visit(
      [&](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, L2Tag>) {
          return l2_norm(f);
        } else if constexpr (std::is_same_v<T, WeightedL2>) {
          if (s.r < 0.0) throw ConfigError("weighted-L2 exponent must be >= 0");
          return weighted_l2(f, s.r);
        } else if constexpr (std::is_same_v<T, Sobolev>) {
          if (s.s < 0.0) throw ConfigError("Sobolev order must be >= 0");
          return sobolev(f, s.s);
        } else {
          if (!(s.s > 0.0) || s.s > 1.0) {
            throw ConfigError("Hoelder order must lie in (0, 1]");
          }
          return holder_seminorm(f, s.s);
        }
      },
      spec);
}

}  // namespace lctlab
