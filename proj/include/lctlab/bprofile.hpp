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
#include <string>

namespace lctlab {

/// The dilation profile b(a) of the limit operator
///   L_a f(u) = (2 pi)^{-1/2} \int e^{i[ b(a) u v + a v^2 ]} fhat(v) dv,
/// declared on the interval (a0, a0 + delta) together with its Lipschitz
/// constant and uniform bound.
struct BProfile {
  std::string name;
  std::function<double(double)> eval;
  double lipschitz_const = 0.0;
  double bound = 1.0;         // M with |b(a)| <= M on the interval
  double a0 = 0.0;            // interval start (limit point)
  double delta = 1.0;         // interval length
  double b_at_a0 = 1.0;       // declared limit value

  bool converges_to_one() const { return b_at_a0 == 1.0; }
  /// a inside [a0, a0+delta]; a0 itself stands for the limit.
  bool contains(double a) const { return a >= a0 && a <= a0 + delta; }
};

/// b(a) = 1 (the classical Schroedinger-mean case).
BProfile constant_one_profile(double delta = 1.0);

/// b(a) = sqrt(1 + 4 a^2), Lipschitz with constant 2.
BProfile sqrt_1p4a2_profile(double delta = 1.0);

/// b(a) = sqrt(1 + a^2) on (a0, a0+delta): non-constant with a range of
/// positive measure, the global-unboundedness profile.
BProfile sqrt_1pa2_profile(double a0, double delta);

/// Throws DegenerateParameterError if a lies outside the declared interval.
void require_in_interval(const BProfile& profile, double a);

/// Test helper: largest sampled difference quotient of b on the interval.
double sampled_lipschitz(const BProfile& profile, int samples = 4096);

}  // namespace lctlab
