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

#include "lctlab/fit.hpp"

#include <cmath>
#include <vector>

#include "lctlab/errors.hpp"

namespace lctlab {

FitResult fit_power_law(std::span<const double> xs,
                        std::span<const double> ys) {
  const std::size_t n = xs.size();
  if (n != ys.size() || n < 2) {
    throw ConfigError("power-law fit needs matched samples, at least two");
  }
  std::vector<double> lx(n), ly(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) {
      throw ConfigError("power-law fit needs strictly positive data");
    }
    lx[i] = std::log(xs[i]);
    ly[i] = std::log(ys[i]);
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0.0) throw ConfigError("power-law fit needs distinct abscissae");
  FitResult r;
  r.exponent = sxy / sxx;
  r.log_const = my - r.exponent * mx;
  double rss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = ly[i] - (r.log_const + r.exponent * lx[i]);
    rss += e * e;
  }
  r.residual = std::sqrt(rss / static_cast<double>(n));
  return r;
}

}  // namespace lctlab
