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

#include "lctlab/reference.hpp"

#include <cmath>

#include "lctlab/sum.hpp"

namespace lctlab::serial {

namespace {

double trapezoid_weight(std::size_t j, std::size_t n, double dt) {
  return (j == 0 || j + 1 == n) ? 0.5 * dt : dt;
}

// identical trimming to the parallel kernels so sums see the same terms
std::pair<std::size_t, std::size_t> support_range(const SampledSignal& f) {
  std::size_t lo = 0, hi = f.values.size();
  while (lo < hi && f.values[lo] == cplx(0.0, 0.0)) ++lo;
  while (hi > lo && f.values[hi - 1] == cplx(0.0, 0.0)) --hi;
  if (lo == hi) return {0, f.values.size()};
  return {lo, hi};
}

}  // namespace

std::vector<cplx> lct_direct(const LCTParams& p, const SampledSignal& f,
                             std::span<const double> u_points) {
  const auto [lo, hi] = support_range(f);
  const std::size_t n = f.grid.count;
  const double dt = f.grid.spacing();
  std::vector<cplx> out(u_points.size());
  for (std::size_t i = 0; i < u_points.size(); ++i) {
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

std::vector<cplx> g_alpha_spectral(double A, double B, cplx D,
                                   const SampledSignal& fhat,
                                   std::span<const double> u_points) {
  const auto [lo, hi] = support_range(fhat);
  const std::size_t n = fhat.grid.count;
  const double dxi = fhat.grid.spacing();
  std::vector<cplx> out(u_points.size());
  for (std::size_t i = 0; i < u_points.size(); ++i) {
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

std::vector<cplx> l_a_time(double a, const BProfile& profile,
                           const SampledSignal& f,
                           std::span<const double> u_points) {
  const double b = profile.eval(a);
  const auto [lo, hi] = support_range(f);
  const cplx pref = std::sqrt(cplx(0.0, 1.0) / (4.0 * M_PI * a));
  const std::size_t n = f.grid.count;
  const double dt = f.grid.spacing();
  const double inv4a = 1.0 / (4.0 * a);
  std::vector<cplx> out(u_points.size());
  for (std::size_t i = 0; i < u_points.size(); ++i) {
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

}  // namespace lctlab::serial
