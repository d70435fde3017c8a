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
#include <vector>

#include "lctlab/bprofile.hpp"
#include "lctlab/lct_params.hpp"
#include "lctlab/signal.hpp"

namespace lctlab::serial {

/// Serial counterparts of the OpenMP quadrature kernels. Same reduction
/// tree, so agreement with the parallel kernels is bitwise, not just
/// approximate. Kept for testing and as the benchmark baseline; no
/// validation or aliasing checks here.
std::vector<cplx> lct_direct(const LCTParams& p, const SampledSignal& f,
                             std::span<const double> u_points);

std::vector<cplx> g_alpha_spectral(double A, double B, cplx D,
                                   const SampledSignal& fhat,
                                   std::span<const double> u_points);

std::vector<cplx> l_a_time(double a, const BProfile& profile,
                           const SampledSignal& f,
                           std::span<const double> u_points);

}  // namespace lctlab::serial
