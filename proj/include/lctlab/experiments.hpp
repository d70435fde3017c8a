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

#include <functional>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lctlab/bprofile.hpp"
#include "lctlab/norms.hpp"
#include "lctlab/report.hpp"
#include "lctlab/signal.hpp"

namespace lctlab {

/// Coefficient profiles alpha -> (A, B) for the continuity sweeps.
struct ProfilePair {
  std::string name;
  std::function<double(double)> A;
  std::function<double(double)> B;
};

struct SweepConfig {
  ProfilePair profile;
  double alpha0 = 0.0;
  std::vector<double> steps;  // strictly decreasing to 0
  std::vector<std::pair<std::string, SampledSignal>> signals;
};

/// Relative L2 gap ||G_{alpha0+step} f - G_{alpha0} f|| / ||f|| per signal
/// and step, with the jump lower bound sqrt(2 pi)|sqrt(1/|B+|)-sqrt(1/|B0|)|
/// recorded whenever B is discontinuous at alpha0.
ExperimentReport l2_continuity_sweep(const SweepConfig& cfg);

/// G_{alpha} f(u) along the sweep plus the truncated dual-norm ladder
/// sqrt(int_{-T}^{T} (1+t^2)^{-w} dt) over doubling T; w is the weight (or
/// Sobolev) exponent of `space`. The ladder diverges for w <= 1/2 and is
/// the divergence witness of the necessity arguments.
ExperimentReport pointwise_probe(const SampledSignal& f, double u,
                                 const SweepConfig& cfg,
                                 const NormSpec& space);

enum class MaximalRoute { Auto, Spectral, TimeDomain };

struct MaximalQuery {
  BProfile profile;
  std::vector<double> a_grid;  // inside (a0, a0+delta], decreasing to a0
  std::vector<double> u_grid;
  double p = std::numeric_limits<double>::infinity();
  MaximalRoute route = MaximalRoute::Auto;
};

/// Pointwise max over a_grid of |l_a f(u)| per u, its argmax selection a(u),
/// and the L^p norm over u_grid. Weak-type L^{1,inf} norms are replaced by
/// L^p norms on the finite grid; the report records this.
ExperimentReport maximal_estimate(const MaximalQuery& q,
                                  const SampledSignal& f);

struct CounterexampleSpec {
  int K = 20;
  double u0 = 0.01;
  SampledSignal phi;   // smooth bump supported in [1/4, 1/2]
  BProfile profile;
  double margin = 1.2;  // chirp-resolution safety factor
};

/// The truncated lacunary chirp series
///   f_K(t) = sum_{k=1..K} sqrt(2 a_k) e^{i (b_k u0 - t)^2/(4 a_k)} phi(t),
/// a_k = 2^{-k}, b_k = b(a_k), on phi's grid.
SampledSignal holder_counterexample(const CounterexampleSpec& spec);

/// Builds f_K and evaluates the witnesses |L_{a_n} f_K(u0)| for n in
/// [n_lo, n_hi], both raw and scaled by sqrt(2 pi) (the unnormalized
/// integral form behind the 0.5|int phi| threshold), plus the discrete
/// C^{1/2} seminorm of f_K.
ExperimentReport holder_counterexample_report(const CounterexampleSpec& spec,
                                              int n_lo = 6, int n_hi = 12);

/// Trapezoid value of int_{-N}^{N} (1+xi^2)^{-1/4} e^{i(a xi^2 + b xi)} dxi
/// with at least 16 samples per fastest period, the normalized ratio
/// |I| (a^2+b^2)^{1/4}, and a half-step refinement delta.
ExperimentReport oscillatory_integral_check(double a, double b,
                                            double N_limit);

/// Per a in a_sequence, the fraction of natural-grid points u with
/// |L_a f(u) - f(u)| > eps. Needs a b(0)=1 profile declared at a0=0.
ExperimentReport ae_convergence_fraction(const SampledSignal& f,
                                         const BProfile& profile,
                                         std::span<const double> a_sequence,
                                         double eps);

/// Wave-packet sharpness probe over the dyadic ladder 16, 32, ..., N_scale:
/// spectral packet PhiHat_N(v) = e^{-i a0 v^2} psi(v/N), modulated so that
/// the phase cancels at the witness point u_a = 2(a-a0)N/b(a); records the
/// witness max over a geometric a-grid, the H^s norm of the worst-shift
/// packet, and the fitted exponents.
ExperimentReport wavepacket_probe(double N_scale, double s,
                                  const BProfile& profile);

/// Global probe over the ladder 16, ..., N_scale with fhat_0 = e^{iN xi}
/// on |xi| <= 1/sqrt(a0+delta): solves b(a~(u)) u + N = 0 on the witness
/// interval F, records the pointwise witness (raw and sqrt(2 pi)-scaled),
/// the ratio ||L_{a~} f_0||_{L^p(F)} / ||f_0||_{H^s}, and its fitted growth
/// exponent. Needs a profile with non-constant b.
ExperimentReport global_unboundedness_probe(double N_scale, double s, double p,
                                            const BProfile& profile);

}  // namespace lctlab
