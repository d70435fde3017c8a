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

#include "lctlab/signal.hpp"

namespace lctlab {

/// Unitary continuous-convention Fourier transform
///   fhat(xi) = (2*pi)^{-1/2} \int e^{-i xi t} f(t) dt,
/// realized as FFT * dt / sqrt(2*pi) with the sign flips that account for
/// the grid origin at -T. Output lives on grid.reciprocal().
SampledSignal fourier(const SampledSignal& f, const AliasingPolicy& policy = {});

/// Adjoint transform, kernel e^{+i xi t}; exact inverse of fourier() on the
/// discrete grid up to roundoff.
SampledSignal inverse_fourier(const SampledSignal& g,
                              const AliasingPolicy& policy = {});

}  // namespace lctlab
