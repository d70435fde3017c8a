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

#include <complex>
#include <functional>
#include <vector>

#include "lctlab/grid.hpp"

namespace lctlab {

using cplx = std::complex<double>;

/// Complex samples of a function on a uniform grid. The computational
/// stand-in for a square-integrable function; the same type carries
/// spectra on the reciprocal grid.
struct SampledSignal {
  Grid grid;
  std::vector<cplx> values;
};

/// Validating constructor: values.size() == grid.count, all entries finite.
SampledSignal make_signal(Grid grid, std::vector<cplx> values);

/// Sample a scalar function on the grid.
SampledSignal sample(const Grid& grid, const std::function<cplx(double)>& fn);

/// max |values| over the signal (0 for the zero signal).
double peak_magnitude(const SampledSignal& f);

/// Largest |t_j| with |f_j| >= rel_tol * peak; 0 for the zero signal.
/// Used both for aliasing checks and for oscillation budgets.
double effective_radius(const SampledSignal& f, double rel_tol = 1e-8);

/// How transforms react to signals that touch the grid boundary or would
/// undersample a chirped integrand.
struct AliasingPolicy {
  double warn_threshold = 1e-8;   // relative boundary magnitude
  double error_threshold = 1e-4;  // above this: throw AliasingError
  bool oscillation_is_error = true;  // Nyquist-budget violations throw
};

/// Relative magnitude of the boundary samples, max(|f_0|, |f_{N-1}|)/peak.
double boundary_mass(const SampledSignal& f);

/// Boundary-support check ("in band" in the time or frequency domain).
/// Warns or throws per policy; `what` names the operation for diagnostics.
void check_in_band(const SampledSignal& f, const AliasingPolicy& policy,
                   const char* what);

/// Nyquist budget check for an oscillatory integrand: max_rate against
/// grid.nyquist(). Warns or throws per policy.
void check_oscillation(double max_rate, const Grid& grid,
                       const AliasingPolicy& policy, const char* what);

}  // namespace lctlab
