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

#include <span>

namespace lctlab {

/// y ~ C x^exponent fitted by least squares on (log x, log y).
struct FitResult {
  double exponent = 0.0;
  double log_const = 0.0;
  double residual = 0.0;  // rms of log-residuals
};

/// Requires xs, ys same length >= 2, all strictly positive.
FitResult fit_power_law(std::span<const double> xs, std::span<const double> ys);

}  // namespace lctlab
