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

#include "lctlab/signal.hpp"

namespace lctlab {

/// One linear canonical transform instance
///   L f(u) = D * \int e^{i[ A u^2/2 - B u t + C t^2/2 ]} f(t) dt,  B != 0.
/// Unitary normalization means |D| = sqrt(|B| / (2 pi)); D = 1 is used by
/// the frequency-side operator convention.
struct LCTParams {
  double A = 0.0;
  double B = 1.0;
  double C = 0.0;
  cplx D = {1.0, 0.0};
};

/// Validates B != 0 (throws DegenerateParameterError).
void validate(const LCTParams& p);

/// Unitary-normalized parameters with the default phase convention
/// D = sqrt(|B|/(2 pi)) e^{-i (pi/4) sgn B}.
LCTParams unitary_params(double A, double B, double C);

/// Fractional-Fourier parameters [cot a, csc a, cot a] with
/// D = sqrt((1 - i cot a)/(2 pi)), principal square root. `alpha` must stay
/// away from integer multiples of pi; callers handle the branch there.
LCTParams frft_params(double alpha);

bool is_unitary_normalized(const LCTParams& p, double tol = 1e-9);

}  // namespace lctlab
