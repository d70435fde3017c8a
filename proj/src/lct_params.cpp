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

#include "lctlab/lct_params.hpp"

#include <cmath>
#include <sstream>

#include "lctlab/errors.hpp"

namespace lctlab {

void validate(const LCTParams& p) {
  if (p.B == 0.0 || !std::isfinite(p.A) || !std::isfinite(p.B) ||
      !std::isfinite(p.C)) {
    std::ostringstream msg;
    msg << "degenerate transform parameters: A=" << p.A << " B=" << p.B
        << " C=" << p.C << " (B must be finite and nonzero)";
    throw DegenerateParameterError(msg.str());
  }
}

LCTParams unitary_params(double A, double B, double C) {
  LCTParams p{A, B, C, {1.0, 0.0}};
  validate(p);
  const double mag = std::sqrt(std::abs(B) / (2.0 * M_PI));
  const double phase = (B > 0.0) ? -M_PI / 4.0 : M_PI / 4.0;
  p.D = std::polar(mag, phase);
  return p;
}

LCTParams frft_params(double alpha) {
  const double s = std::sin(alpha);
  if (std::abs(s) < 1e-12) {
    throw DegenerateParameterError(
        "fractional order too close to an integer multiple of pi");
  }
  const double ct = std::cos(alpha) / s;
  LCTParams p{ct, 1.0 / s, ct, {1.0, 0.0}};
  p.D = std::sqrt(cplx(1.0, -ct) / (2.0 * M_PI));
  return p;
}

bool is_unitary_normalized(const LCTParams& p, double tol) {
  const double target = std::sqrt(std::abs(p.B) / (2.0 * M_PI));
  return std::abs(std::abs(p.D) - target) <= tol * target;
}

}  // namespace lctlab
