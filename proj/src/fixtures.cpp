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

#include "lctlab/fixtures.hpp"

#include <cmath>

namespace lctlab::fixtures {

namespace {

double bump_profile(double x) {
  if (std::abs(x) >= 1.0) return 0.0;
  // exp(-1/(1-x^2)) scaled to unit peak
  return std::exp(1.0 - 1.0 / (1.0 - x * x));
}

}  // namespace

SampledSignal gaussian(const Grid& grid) {
  return sample(grid, [](double t) { return cplx(std::exp(-0.5 * t * t), 0.0); });
}

SampledSignal smooth_bump(const Grid& grid, double center, double radius) {
  return sample(grid, [=](double t) {
    return cplx(bump_profile((t - center) / radius), 0.0);
  });
}

SampledSignal hermite4_gaussian(const Grid& grid) {
  return sample(grid, [](double t) {
    const double t2 = t * t;
    const double p = 16.0 * t2 * t2 - 48.0 * t2 + 12.0;
    return cplx(p * std::exp(-0.5 * t2) / 12.0, 0.0);
  });
}

std::vector<std::pair<std::string, SampledSignal>> transform_set(
    const Grid& grid) {
  std::vector<std::pair<std::string, SampledSignal>> out;
  out.emplace_back("gaussian", gaussian(grid));
  out.emplace_back("smooth_bump", smooth_bump(grid));
  out.emplace_back("hermite4_gaussian", hermite4_gaussian(grid));
  return out;
}

SampledSignal sqrt_cusp(const Grid& grid) {
  return sample(grid, [](double t) {
    if (t <= 0.0 || t >= 1.0) return cplx(0.0, 0.0);
    return cplx(std::sqrt(t * (1.0 - t)), 0.0);
  });
}

SampledSignal lacunary_cos(const Grid& grid, int levels) {
  return sample(grid, [levels](double t) {
    const double w = bump_profile(2.0 * t - 1.0);
    if (w == 0.0) return cplx(0.0, 0.0);
    double acc = 0.0;
    for (int k = 1; k <= levels; ++k) {
      acc += std::pow(2.0, -0.5 * k) * std::cos(std::ldexp(M_PI, k) * t);
    }
    return cplx(w * acc, 0.0);
  });
}

SampledSignal interior_cusp(const Grid& grid) {
  return sample(grid, [](double t) {
    const double w = bump_profile(2.0 * t - 1.0);
    if (w == 0.0) return cplx(0.0, 0.0);
    return cplx(w * std::sqrt(std::abs(t - 0.5)), 0.0);
  });
}

std::vector<std::pair<std::string, SampledSignal>> holder_set(
    const Grid& grid) {
  std::vector<std::pair<std::string, SampledSignal>> out;
  out.emplace_back("sqrt_cusp", sqrt_cusp(grid));
  out.emplace_back("lacunary_cos", lacunary_cos(grid));
  out.emplace_back("interior_cusp", interior_cusp(grid));
  return out;
}

}  // namespace lctlab::fixtures
