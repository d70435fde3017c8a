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

#include "lctlab/signal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lctlab/errors.hpp"

namespace lctlab {

SampledSignal make_signal(Grid grid, std::vector<cplx> values) {
  if (values.size() != grid.count) {
    std::ostringstream msg;
    msg << "signal has " << values.size() << " samples but grid expects "
        << grid.count;
    throw ConfigError(msg.str());
  }
  for (const cplx& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw ConfigError("signal contains a non-finite sample");
    }
  }
  return SampledSignal{grid, std::move(values)};
}

SampledSignal sample(const Grid& grid, const std::function<cplx(double)>& fn) {
  std::vector<cplx> values(grid.count);
  for (std::size_t j = 0; j < grid.count; ++j) values[j] = fn(grid.point(j));
  return make_signal(grid, std::move(values));
}

double peak_magnitude(const SampledSignal& f) {
  double peak = 0.0;
  for (const cplx& v : f.values) peak = std::max(peak, std::abs(v));
  return peak;
}

double effective_radius(const SampledSignal& f, double rel_tol) {
  const double cutoff = rel_tol * peak_magnitude(f);
  if (cutoff == 0.0) return 0.0;
  double radius = 0.0;
  for (std::size_t j = 0; j < f.values.size(); ++j) {
    if (std::abs(f.values[j]) >= cutoff) {
      radius = std::max(radius, std::abs(f.grid.point(j)));
    }
  }
  return radius;
}

double boundary_mass(const SampledSignal& f) {
  const double peak = peak_magnitude(f);
  if (peak == 0.0) return 0.0;
  return std::max(std::abs(f.values.front()), std::abs(f.values.back())) / peak;
}

void check_in_band(const SampledSignal& f, const AliasingPolicy& policy,
                   const char* what) {
  const double mass = boundary_mass(f);
  if (mass > policy.error_threshold) {
    std::ostringstream msg;
    msg << what << ": aliasing risk, relative boundary magnitude " << mass
        << " exceeds " << policy.error_threshold;
    throw AliasingError(msg.str());
  }
  if (mass > policy.warn_threshold) {
    std::ostringstream msg;
    msg << what << ": boundary magnitude " << mass
        << " above taper tolerance " << policy.warn_threshold;
    emit_warning(msg.str());
  }
}

void check_oscillation(double max_rate, const Grid& grid,
                       const AliasingPolicy& policy, const char* what) {
  const double budget = grid.nyquist();
  if (max_rate <= budget) return;
  std::ostringstream msg;
  msg << what << ": aliasing risk, instantaneous frequency " << max_rate
      << " exceeds the grid Nyquist rate " << budget;
  if (policy.oscillation_is_error) throw AliasingError(msg.str());
  emit_warning(msg.str());
}

}  // namespace lctlab
