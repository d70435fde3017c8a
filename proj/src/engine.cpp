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

#include "lctlab/engine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lctlab/errors.hpp"
#include "lctlab/fourier.hpp"
#include "lctlab/interp.hpp"
#include "lctlab/norms.hpp"
#include "lctlab/sum.hpp"

namespace lctlab {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

double trapezoid_weight(std::size_t j, std::size_t n, double dt) {
  return (j == 0 || j + 1 == n) ? 0.5 * dt : dt;
}

// Index range of the nonzero samples; quadrature over compactly supported
// fixtures skips the zero tails.
std::pair<std::size_t, std::size_t> support_range(const SampledSignal& f) {
  std::size_t lo = 0, hi = f.values.size();
  while (lo < hi && f.values[lo] == cplx(0.0, 0.0)) ++lo;
  while (hi > lo && f.values[hi - 1] == cplx(0.0, 0.0)) --hi;
  if (lo == hi) return {0, f.values.size()};
  return {lo, hi};
}

double max_abs(std::span<const double> xs) {
  double m = 0.0;
  for (double x : xs) m = std::max(m, std::abs(x));
  return m;
}

// Natural-grid resampling shared by the chirp paths: spectrum-indexed data
// h_k on grid g maps to output point u_j with B u_j = xi_{(N-j) mod N} when
// B < 0 and xi_j otherwise.
SampledSignal resample_for_b(const Grid& g, const std::vector<cplx>& h,
                             double B) {
  const std::size_t n = g.count;
  Grid out_grid{g.half_width / std::abs(B), n};
  std::vector<cplx> out(n);
  if (B > 0.0) {
    out = h;
  } else {
    for (std::size_t j = 0; j < n; ++j) out[j] = h[(n - j) % n];
  }
  return SampledSignal{out_grid, std::move(out)};
}

}  // namespace

std::vector<cplx> lct_direct(const LCTParams& p, const SampledSignal& f,
                             std::span<const double> u_points,
                             const AliasingPolicy& policy) {
  validate(p);
  check_in_band(f, policy, "lct_direct");
  const double r_eff = effective_radius(f);
  const double max_rate = std::abs(p.C) * r_eff + std::abs(p.B) * max_abs(u_points);
  check_oscillation(max_rate, f.grid, policy, "lct_direct");

  const auto [lo, hi] = support_range(f);
  const std::size_t n = f.grid.count;
  const double dt = f.grid.spacing();
  std::vector<cplx> out(u_points.size());
  const long m = static_cast<long>(u_points.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < m; ++i) {
    const double u = u_points[i];
    const cplx sum = pairwise_sum_indexed(hi - lo, [&](std::size_t k) {
      const std::size_t j = lo + k;
      const double t = f.grid.point(j);
      const double phase = -p.B * u * t + 0.5 * p.C * t * t;
      return f.values[j] * std::polar(trapezoid_weight(j, n, dt), phase);
    });
    out[i] = p.D * std::polar(1.0, 0.5 * p.A * u * u) * sum;
  }
  return out;
}

SampledSignal lct_chirp(const LCTParams& p, const SampledSignal& f,
                        const AliasingPolicy& policy) {
  validate(p);
  const double r_eff = effective_radius(f);
  check_oscillation(std::abs(p.C) * r_eff, f.grid, policy, "lct_chirp");

  const std::size_t n = f.grid.count;
  std::vector<cplx> g(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double t = f.grid.point(j);
    g[j] = f.values[j] * std::polar(1.0, 0.5 * p.C * t * t);
  }
  const SampledSignal ghat =
      fourier(SampledSignal{f.grid, std::move(g)}, policy);
  // wraparound in the spectrum corrupts the output edges; warn only
  check_in_band(ghat, AliasingPolicy{policy.warn_threshold, 1.0, false},
                "lct_chirp spectrum");

  SampledSignal out = resample_for_b(ghat.grid, ghat.values, p.B);
  const cplx scale = p.D * std::sqrt(kTwoPi);
  for (std::size_t j = 0; j < n; ++j) {
    const double u = out.grid.point(j);
    out.values[j] *= scale * std::polar(1.0, 0.5 * p.A * u * u);
  }
  return out;
}

SampledSignal frft(double alpha, const SampledSignal& f,
                   const AliasingPolicy& policy, double eps_branch) {
  // reduce to (-pi, pi]
  double a = std::remainder(alpha, kTwoPi);
  if (a <= -M_PI) a += kTwoPi;

  if (std::abs(a) <= eps_branch) {
    return f;
  }
  if (M_PI - std::abs(a) <= eps_branch) {
    // order-one branch: f(-u) by periodic index reversal
    const std::size_t n = f.grid.count;
    std::vector<cplx> rev(n);
    for (std::size_t j = 0; j < n; ++j) rev[j] = f.values[(n - j) % n];
    return SampledSignal{f.grid, std::move(rev)};
  }
  return lct_chirp(frft_params(a), f, policy);
}

std::vector<cplx> g_alpha_spectral(double A, double B, cplx D,
                                   const SampledSignal& fhat,
                                   std::span<const double> u_points) {
  if (B == 0.0) throw DegenerateParameterError("G operator needs B != 0");
  const auto [lo, hi] = support_range(fhat);
  const std::size_t n = fhat.grid.count;
  const double dxi = fhat.grid.spacing();
  std::vector<cplx> out(u_points.size());
  const long m = static_cast<long>(u_points.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < m; ++i) {
    const double u = u_points[i];
    const cplx sum = pairwise_sum_indexed(hi - lo, [&](std::size_t k) {
      const std::size_t j = lo + k;
      const double xi = fhat.grid.point(j);
      const double phase = A * xi * xi + B * u * xi;
      return fhat.values[j] * std::polar(trapezoid_weight(j, n, dxi), phase);
    });
    out[i] = D * sum;
  }
  return out;
}

std::vector<cplx> g_alpha(double A, double B, cplx D, const SampledSignal& f,
                          std::span<const double> u_points,
                          const AliasingPolicy& policy) {
  const SampledSignal fhat = fourier(f, policy);
  const double xi_eff = effective_radius(fhat);
  const double max_rate = 2.0 * std::abs(A) * xi_eff + std::abs(B) * max_abs(u_points);
  check_oscillation(max_rate, fhat.grid, policy, "g_alpha");
  return g_alpha_spectral(A, B, D, fhat, u_points);
}

SampledSignal g_alpha_grid(double A, double B, cplx D, const SampledSignal& f,
                           const AliasingPolicy& policy) {
  if (B == 0.0) throw DegenerateParameterError("G operator needs B != 0");
  const SampledSignal fhat = fourier(f, policy);
  const double xi_eff = effective_radius(fhat);
  check_oscillation(2.0 * std::abs(A) * xi_eff, fhat.grid, policy,
                    "g_alpha_grid");
  const std::size_t n = fhat.grid.count;
  std::vector<cplx> h(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double xi = fhat.grid.point(k);
    h[k] = fhat.values[k] * std::polar(1.0, A * xi * xi);
  }
  // G f(u) = D sqrt(2 pi) (inverse Fourier of h)(B u)
  const SampledSignal ht =
      inverse_fourier(SampledSignal{fhat.grid, std::move(h)},
                      AliasingPolicy{policy.warn_threshold, 1.0, false});
  SampledSignal out = resample_for_b(ht.grid, ht.values, B);
  const cplx scale = D * std::sqrt(kTwoPi);
  for (auto& v : out.values) v *= scale;
  return out;
}

std::vector<cplx> l_a(double a, const BProfile& profile,
                      const SampledSignal& f, std::span<const double> u_points,
                      const AliasingPolicy& policy) {
  require_in_interval(profile, a);
  const double b = profile.eval(a);
  return g_alpha(a, b, cplx(1.0 / std::sqrt(kTwoPi), 0.0), f, u_points,
                 policy);
}

std::vector<cplx> l_a_spectral(double a, const BProfile& profile,
                               const SampledSignal& fhat,
                               std::span<const double> u_points) {
  require_in_interval(profile, a);
  const double b = profile.eval(a);
  return g_alpha_spectral(a, b, cplx(1.0 / std::sqrt(kTwoPi), 0.0), fhat,
                          u_points);
}

std::vector<cplx> l_a_time(double a, const BProfile& profile,
                           const SampledSignal& f,
                           std::span<const double> u_points) {
  require_in_interval(profile, a);
  if (a == 0.0) {
    throw DegenerateParameterError("time-domain route needs a != 0");
  }
  const double b = profile.eval(a);
  const auto [lo, hi] = support_range(f);
  const double r_eff = effective_radius(f);
  const double reach = b * max_abs(u_points) + r_eff;
  const double max_rate = reach / (2.0 * std::abs(a));
  if (max_rate > f.grid.nyquist()) {
    std::ostringstream msg;
    msg << "l_a_time: kernel rate " << max_rate
        << " exceeds the grid Nyquist rate " << f.grid.nyquist()
        << " at a=" << a;
    throw ResolutionError(msg.str());
  }

  const cplx pref = std::sqrt(cplx(0.0, 1.0) / (4.0 * M_PI * a));
  const std::size_t n = f.grid.count;
  const double dt = f.grid.spacing();
  const double inv4a = 1.0 / (4.0 * a);
  std::vector<cplx> out(u_points.size());
  const long m = static_cast<long>(u_points.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < m; ++i) {
    const double bu = b * u_points[i];
    const cplx sum = pairwise_sum_indexed(hi - lo, [&](std::size_t k) {
      const std::size_t j = lo + k;
      const double d = bu - f.grid.point(j);
      return f.values[j] *
             std::polar(trapezoid_weight(j, n, dt), -d * d * inv4a);
    });
    out[i] = pref * sum;
  }
  return out;
}

double g_alpha_l2_gap(const SampledSignal& fhat, double A1, double B1,
                      double A2, double B2) {
  if (B1 == 0.0 || B2 == 0.0) {
    throw DegenerateParameterError("G operator needs B != 0");
  }
  const std::size_t n = fhat.grid.count;
  const double dxi = fhat.grid.spacing();
  // same reduction tree as the cross term so identical operators give an
  // exactly zero gap, not a roundoff-sized one
  const double norm2 =
      pairwise_sum_indexed(n, [&](std::size_t j) {
        return cplx(std::norm(fhat.values[j]) *
                        trapezoid_weight(j, n, dxi),
                    0.0);
      }).real();
  if (norm2 == 0.0) return 0.0;
  const double norm_f = std::sqrt(norm2);

  const double inv1 = 1.0 / std::abs(B1);
  const double inv2 = 1.0 / std::abs(B2);
  double cross_core = 0.0;  // cross term / (2 pi)
  if (B1 == B2) {
    // same-grid diagonal: no interpolation, floor is pure roundoff
    const double dA = A1 - A2;
    cplx acc = pairwise_sum_indexed(n, [&](std::size_t j) {
      const double xi = fhat.grid.point(j);
      return cplx(std::norm(fhat.values[j]), 0.0) *
             std::polar(trapezoid_weight(j, n, dxi), dA * xi * xi);
    });
    cross_core = inv1 * acc.real();
  } else {
    const double xi_max = fhat.grid.half_width;
    const double v_max = std::min(std::abs(B1), std::abs(B2)) * xi_max;
    const double phase_coef = A1 / (B1 * B1) - A2 / (B2 * B2);
    // step resolves both resampled spectra and the quadratic phase
    double dv = 0.5 * dxi * std::min(std::abs(B1), std::abs(B2));
    const double max_rate = 2.0 * std::abs(phase_coef) * v_max;
    if (max_rate > 0.0) dv = std::min(dv, (M_PI / 8.0) / max_rate);
    const std::size_t steps =
        static_cast<std::size_t>(std::ceil(2.0 * v_max / dv)) + 1;
    const double step = 2.0 * v_max / static_cast<double>(steps - 1);
    cplx acc = pairwise_sum_indexed(steps, [&](std::size_t j) {
      const double v = -v_max + static_cast<double>(j) * step;
      const double w = (j == 0 || j + 1 == steps) ? 0.5 * step : step;
      const cplx g1 = interp_cubic(fhat, v / B1);
      const cplx g2 = interp_cubic(fhat, v / B2);
      return g1 * std::conj(g2) *
             std::polar(w, phase_coef * v * v);
    });
    cross_core = inv1 * inv2 * acc.real();
  }

  const double gap2 =
      kTwoPi * ((inv1 + inv2) * norm2 - 2.0 * cross_core);
  return std::sqrt(std::max(gap2, 0.0)) / norm_f;
}

}  // namespace lctlab
