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

#include "lctlab/fourier.hpp"

#include <cmath>

#include "lctlab/fft.hpp"

namespace lctlab {

// With t_j = -T + j dt and xi_k = -pi/dt + k dxi one has
//   exp(-i xi_k t_j) = (-1)^j (-1)^k exp(-2 pi i jk/N)
// (N a multiple of 4), so both transforms reduce to sign flips around a
// plain FFT. No trigonometric phase corrections are needed.

SampledSignal fourier(const SampledSignal& f, const AliasingPolicy& policy) {
  check_in_band(f, policy, "fourier");
  const std::size_t n = f.grid.count;
  std::vector<cplx> data(n);
  for (std::size_t j = 0; j < n; ++j) {
    data[j] = (j & 1u) ? -f.values[j] : f.values[j];
  }
  fft_radix2(data, /*inverse=*/false);
  const double scale = f.grid.spacing() / std::sqrt(2.0 * M_PI);
  for (std::size_t k = 0; k < n; ++k) {
    data[k] *= (k & 1u) ? -scale : scale;
  }
  return SampledSignal{f.grid.reciprocal(), std::move(data)};
}

SampledSignal inverse_fourier(const SampledSignal& g,
                              const AliasingPolicy& policy) {
  check_in_band(g, policy, "inverse_fourier");
  const std::size_t n = g.grid.count;
  std::vector<cplx> data(n);
  for (std::size_t k = 0; k < n; ++k) {
    data[k] = (k & 1u) ? -g.values[k] : g.values[k];
  }
  fft_radix2(data, /*inverse=*/true);
  const double scale =
      g.grid.spacing() * static_cast<double>(n) / std::sqrt(2.0 * M_PI);
  for (std::size_t j = 0; j < n; ++j) {
    data[j] *= (j & 1u) ? -scale : scale;
  }
  return SampledSignal{g.grid.reciprocal(), std::move(data)};
}

}  // namespace lctlab
