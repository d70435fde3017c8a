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

#include "lctlab/bprofile.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lctlab/errors.hpp"

namespace lctlab {

BProfile constant_one_profile(double delta) {
  BProfile p;
  p.name = "constant_one";
  p.eval = [](double) { return 1.0; };
  p.lipschitz_const = 0.0;
  p.bound = 1.0;
  p.a0 = 0.0;
  p.delta = delta;
  p.b_at_a0 = 1.0;
  return p;
}

BProfile sqrt_1p4a2_profile(double delta) {
  BProfile p;
  p.name = "sqrt_1p4a2";
  p.eval = [](double a) { return std::sqrt(1.0 + 4.0 * a * a); };
  p.lipschitz_const = 2.0;
  p.bound = std::sqrt(1.0 + 4.0 * delta * delta);
  p.a0 = 0.0;
  p.delta = delta;
  p.b_at_a0 = 1.0;
  return p;
}

BProfile sqrt_1pa2_profile(double a0, double delta) {
  BProfile p;
  p.name = "sqrt_1pa2";
  p.eval = [](double a) { return std::sqrt(1.0 + a * a); };
  p.lipschitz_const = 1.0;
  const double hi = std::max(std::abs(a0), std::abs(a0 + delta));
  p.bound = std::sqrt(1.0 + hi * hi);
  p.a0 = a0;
  p.delta = delta;
  p.b_at_a0 = std::sqrt(1.0 + a0 * a0);
  return p;
}

void require_in_interval(const BProfile& profile, double a) {
  if (profile.contains(a)) return;
  std::ostringstream msg;
  msg << "parameter a=" << a << " lies outside the declared interval ["
      << profile.a0 << ", " << profile.a0 + profile.delta << "] of profile "
      << profile.name;
  throw DegenerateParameterError(msg.str());
}

double sampled_lipschitz(const BProfile& profile, int samples) {
  const double h = profile.delta / static_cast<double>(samples);
  double best = 0.0;
  for (int j = 0; j < samples; ++j) {
    const double a = profile.a0 + j * h;
    best = std::max(best,
                    std::abs(profile.eval(a + h) - profile.eval(a)) / h);
  }
  return best;
}

}  // namespace lctlab
