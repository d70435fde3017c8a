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

namespace lctlab {

/// Direct trapezoid quadrature of the LCT integral at arbitrary points;
/// O(N) per point, OpenMP-parallel over the points. Checks the
/// instantaneous-frequency budget |C t - B u| <= pi/dt over the effective
/// support of f.
std::vector<cplx> lct_direct(const LCTParams& p, const SampledSignal& f,
                             std::span<const double> u_points,
                             const AliasingPolicy& policy = {});

/// Chirp--FFT factorization: chirp-multiply e^{i C t^2/2}, Fourier
/// transform, sample at B u, chirp-multiply e^{i A u^2/2}, scale by
/// D sqrt(2 pi). O(N log N); output on the natural grid (input frequency
/// grid divided by B, ascending even for negative B).
SampledSignal lct_chirp(const LCTParams& p, const SampledSignal& f,
                        const AliasingPolicy& policy = {});

/// Fractional Fourier transform of order alpha. alpha is reduced modulo
/// 2 pi into (-pi, pi]; within eps_branch of {0, pi} the integer-order
/// branch f((-1)^n u) applies (periodic index reversal), otherwise the
/// chirp path with [cot a, csc a, cot a].
SampledSignal frft(double alpha, const SampledSignal& f,
                   const AliasingPolicy& policy = {},
                   double eps_branch = 1e-3);

/// Frequency-side quadratic-phase operator
///   G f(u) = D \int fhat(xi) e^{i[ A xi^2 + B u xi ]} dxi
/// evaluated at arbitrary u by direct per-point sums over the spectrum.
std::vector<cplx> g_alpha(double A, double B, cplx D, const SampledSignal& f,
                          std::span<const double> u_points,
                          const AliasingPolicy& policy = {});

/// Same operator when the spectrum fhat is already available (callers doing
/// parameter sweeps compute it once).
std::vector<cplx> g_alpha_spectral(double A, double B, cplx D,
                                   const SampledSignal& fhat,
                                   std::span<const double> u_points);

/// Fast path: G f on its natural grid (time grid divided by B) via
/// chirped spectrum + inverse FFT.
SampledSignal g_alpha_grid(double A, double B, cplx D, const SampledSignal& f,
                           const AliasingPolicy& policy = {});

/// Limit operator L_a f(u) = (2 pi)^{-1/2} \int e^{i[b(a)uv + a v^2]}
/// fhat(v) dv; the G-operator with A=a, B=b(a), D=(2 pi)^{-1/2}.
/// a must lie in the profile's declared interval (a0 itself allowed).
std::vector<cplx> l_a(double a, const BProfile& profile,
                      const SampledSignal& f, std::span<const double> u_points,
                      const AliasingPolicy& policy = {});

/// Spectrum-side variant of l_a for sweeps.
std::vector<cplx> l_a_spectral(double a, const BProfile& profile,
                               const SampledSignal& fhat,
                               std::span<const double> u_points);

/// Time-domain form (valid for a != 0):
///   L_a f(u) = sqrt(i/(4 pi a)) \int f(t) e^{-i (b(a)u - t)^2/(4a)} dt.
/// Used where the spectrum is too wide to chirp accurately.
std::vector<cplx> l_a_time(double a, const BProfile& profile,
                           const SampledSignal& f,
                           std::span<const double> u_points);

/// || L2 of the difference of two D=1 G-operators over all of R ||, computed
/// spectrally (exact Plancherel diagonal terms; cross term by quadrature
/// with cubic interpolation of fhat when B1 != B2). Returns the gap
/// normalized by ||f||.
double g_alpha_l2_gap(const SampledSignal& fhat, double A1, double B1,
                      double A2, double B2);

}  // namespace lctlab
