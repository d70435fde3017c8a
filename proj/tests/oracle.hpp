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

// Test-only oracles: a hand-rolled deterministic generator and closed-form
// transforms of the Gaussian, plus a slow refinement quadrature that checks
// the production kernels against independently computed integrals.

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "lctlab/lct_params.hpp"
#include "lctlab/signal.hpp"

namespace oracle {

using lctlab::cplx;

/// SplitMix64: tiny, seedable, reproducible across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

 private:
  std::uint64_t state_;
};

/// Closed-form LCT of the Gaussian e^{-t^2/2}:
///   L g(u) = D e^{i A u^2/2} sqrt(2 pi / (1 - i C))
///            exp(-B^2 u^2 / (2 (1 - i C))),
/// principal square root (Re(1 - iC) = 1 > 0).
inline cplx lct_gaussian(const lctlab::LCTParams& p, double u) {
  const cplx one_minus_ic(1.0, -p.C);
  const cplx amp = p.D * std::sqrt(2.0 * M_PI / one_minus_ic);
  const cplx phase(0.0, 0.5 * p.A * u * u);
  return amp * std::exp(phase - p.B * p.B * u * u / (2.0 * one_minus_ic));
}

/// FRFT eigenrelation of the Gaussian. With the principal-root normalizer
/// D = sqrt((1 - i cot a)/(2 pi)) the eigenvalue is exactly 1: the
/// amplitude D sqrt(2 pi/(1 - i cot a)) collapses to 1 and the exponent
/// i cot a u^2/2 - u^2 csc^2 a/(2(1 - i cot a)) to -u^2/2.
inline cplx frft_gaussian(double /*alpha*/, double u) {
  return cplx(std::exp(-0.5 * u * u), 0.0);
}

/// Refinement trapezoid quadrature of the LCT integral for a closed-form
/// integrand, sampled `factor` times finer than `grid`. Independent of the
/// production kernels: plain left-to-right accumulation.
template <typename Fn>
cplx lct_refined(const lctlab::LCTParams& p, const Fn& f,
                 const lctlab::Grid& grid, double u, int factor = 4) {
  const std::size_t n = grid.count * static_cast<std::size_t>(factor);
  const double dt = 2.0 * grid.half_width / static_cast<double>(n);
  cplx acc(0.0, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double t = -grid.half_width + static_cast<double>(j) * dt;
    const double phase = 0.5 * p.C * t * t - p.B * u * t;
    acc += f(t) * std::exp(cplx(0.0, phase));
  }
  return p.D * std::exp(cplx(0.0, 0.5 * p.A * u * u)) * acc * dt;
}

/// Random band- and support-limited test signal: a few Gaussian bumps with
/// random centers, widths and complex weights. Stays well inside the grid.
inline lctlab::SampledSignal random_signal(const lctlab::Grid& grid, Rng& rng,
                                           int bumps = 4) {
  struct Bump {
    double c, w;
    cplx amp;
  };
  std::vector<Bump> spec;
  const double span = 0.25 * grid.half_width;
  for (int k = 0; k < bumps; ++k) {
    spec.push_back({rng.uniform(-span, span), rng.uniform(0.5, 2.0),
                    cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0))});
  }
  return lctlab::sample(grid, [spec](double t) {
    cplx v(0.0, 0.0);
    for (const Bump& b : spec) {
      const double x = (t - b.c) / b.w;
      v += b.amp * std::exp(-0.5 * x * x);
    }
    return v;
  });
}

inline double rel_err(cplx got, cplx want, double scale) {
  return std::abs(got - want) / scale;
}

}  // namespace oracle
