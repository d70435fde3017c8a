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

#include "lctlab/subgroup.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lctlab/engine.hpp"
#include "lctlab/errors.hpp"
#include "lctlab/interp.hpp"
#include "lctlab/norms.hpp"

namespace lctlab {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

double sgn(double x) { return (x > 0.0) - (x < 0.0); }

[[noreturn]] void throw_pole(double alpha) {
  std::ostringstream msg;
  msg << "subgroup parameter alpha=" << alpha << " is at a pole of the family";
  throw DegenerateParameterError(msg.str());
}

}  // namespace

void validate(const SubgroupSpec& spec) {
  if (!std::isfinite(spec.omega) || !std::isfinite(spec.lambda) ||
      !std::isfinite(spec.gamma)) {
    throw ConfigError("subgroup spec has a non-finite entry");
  }
  if (spec.lambda == 0.0) throw ConfigError("subgroup spec needs lambda != 0");
  if (spec.family != Family::ParabolicII && spec.omega == 0.0) {
    throw ConfigError("families I and III need omega != 0");
  }
}

double GroupResidual::max() const {
  return std::max(std::max(A, B), std::max(C, D));
}

cplx d_solution(const SubgroupSpec& spec, double alpha, double pole_tol) {
  validate(spec);
  switch (spec.family) {
    case Family::TrigI: {
      const double wa = spec.omega * alpha;
      const double s = std::sin(wa);
      if (std::abs(std::remainder(wa, M_PI)) < pole_tol) throw_pole(alpha);
      // reduces to sqrt((1 - i cot a)/(2 pi)) when omega = lambda = 1 and
      // a in (0, pi)
      const double mag =
          1.0 / std::sqrt(kTwoPi * std::abs(spec.lambda) * std::abs(s));
      return std::polar(mag, 0.5 * wa - (M_PI / 4.0) * sgn(spec.lambda * s));
    }
    case Family::ParabolicII: {
      if (std::abs(alpha) < pole_tol) throw_pole(alpha);
      const double mag =
          1.0 / std::sqrt(kTwoPi * std::abs(spec.lambda * alpha));
      return std::polar(mag, -(M_PI / 4.0) * sgn(spec.lambda * alpha));
    }
    case Family::HyperbolicIII: {
      const double wa = spec.omega * alpha;
      if (std::abs(alpha) < pole_tol) throw_pole(alpha);
      const double s = std::sinh(wa);
      const double mag =
          1.0 / std::sqrt(kTwoPi * std::abs(spec.lambda) * std::abs(s));
      return std::polar(mag, -(M_PI / 4.0) * sgn(spec.lambda * s));
    }
  }
  throw ConfigError("unknown subgroup family");
}

LCTParams family_params(const SubgroupSpec& spec, double alpha,
                        double pole_tol) {
  validate(spec);
  double mid = 0.0;  // the shared cot/1-over/coth part
  double b = 0.0;
  switch (spec.family) {
    case Family::TrigI: {
      const double wa = spec.omega * alpha;
      if (std::abs(std::remainder(wa, M_PI)) < pole_tol) throw_pole(alpha);
      mid = std::cos(wa) / std::sin(wa) / spec.lambda;
      b = 1.0 / (std::sin(wa) * spec.lambda);
      break;
    }
    case Family::ParabolicII: {
      if (std::abs(alpha) < pole_tol) throw_pole(alpha);
      mid = 1.0 / (spec.lambda * alpha);
      b = mid;
      break;
    }
    case Family::HyperbolicIII: {
      const double wa = spec.omega * alpha;
      if (std::abs(alpha) < pole_tol) throw_pole(alpha);
      mid = std::cosh(wa) / std::sinh(wa) / spec.lambda;
      b = 1.0 / (std::sinh(wa) * spec.lambda);
      break;
    }
  }
  LCTParams p{mid - spec.gamma, b, mid + spec.gamma,
              d_solution(spec, alpha, pole_tol)};
  validate(p);
  return p;
}

LCTParams compose(const LCTParams& q, const LCTParams& p, double denom_tol) {
  validate(p);
  validate(q);
  const double denom = q.A + p.C;
  if (std::abs(denom) < denom_tol) {
    std::ostringstream msg;
    msg << "non-composable pair: |A_q + C_p| = " << std::abs(denom)
        << " below " << denom_tol;
    throw DegenerateParameterError(msg.str());
  }
  LCTParams r;
  r.A = p.A - p.B * p.B / denom;
  r.B = p.B * q.B / denom;
  r.C = p.C - p.B * p.B / denom;
  const cplx sqrt_2pii = std::sqrt(kTwoPi) * std::polar(1.0, M_PI / 4.0);
  r.D = sqrt_2pii * p.D * q.D / std::sqrt(cplx(denom, 0.0));
  return r;
}

GroupResidual group_residual(const SubgroupSpec& spec, double alpha,
                             double beta) {
  const LCTParams p = family_params(spec, alpha);
  const LCTParams q = family_params(spec, beta);
  const LCTParams target = family_params(spec, alpha + beta);
  const LCTParams c = compose(q, p);
  GroupResidual r;
  r.A = std::abs(c.A - target.A);
  r.B = std::abs(c.B - target.B);
  r.C = std::abs(c.C - target.C);
  r.D = std::abs(c.D - target.D);
  return r;
}

double operator_group_check(const SubgroupSpec& spec, double alpha, double beta,
                            const SampledSignal& f, double identity_tol) {
  const bool id_a = std::abs(alpha) < identity_tol;
  const bool id_b = std::abs(beta) < identity_tol;
  const bool id_ab = std::abs(alpha + beta) < identity_tol;
  const double norm_f = l2_norm(f);
  if (norm_f == 0.0) return 0.0;
  if (id_a && id_b) return 0.0;

  AliasingPolicy lax;
  lax.error_threshold = 1.0;
  lax.oscillation_is_error = false;

  const SampledSignal target =
      id_ab ? f : lct_chirp(family_params(spec, alpha + beta), f, lax);
  const SampledSignal inner =
      id_a ? f : lct_chirp(family_params(spec, alpha), f, lax);

  // window: where target carries mass and the direct quadrature of the
  // outer transform still resolves the phase on inner's grid
  double u_window = effective_radius(target, 1e-6);
  if (!id_b) {
    const LCTParams outer_p = family_params(spec, beta);
    const double budget = 0.9 * inner.grid.nyquist() -
                          std::abs(outer_p.C) * effective_radius(inner);
    if (budget <= 0.0) {
      throw ResolutionError(
          "operator_group_check: outer chirp unresolved on the inner grid");
    }
    u_window = std::min(u_window, budget / std::abs(outer_p.B));
  }

  std::vector<double> u_points;
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < target.grid.count; ++j) {
    const double u = target.grid.point(j);
    if (std::abs(u) <= u_window) {
      u_points.push_back(u);
      idx.push_back(j);
    }
  }
  if (u_points.empty()) {
    throw ResolutionError("operator_group_check: empty comparison window");
  }

  std::vector<cplx> outer(u_points.size());
  if (id_b) {
    for (std::size_t i = 0; i < u_points.size(); ++i) {
      outer[i] = interp_cubic(inner, u_points[i]);
    }
  } else {
    outer = lct_direct(family_params(spec, beta), inner, u_points, lax);
  }

  const double du = target.grid.spacing();
  double acc = 0.0;
  for (std::size_t i = 0; i < u_points.size(); ++i) {
    acc += std::norm(outer[i] - target.values[idx[i]]) * du;
  }
  return std::sqrt(acc) / norm_f;
}

}  // namespace lctlab
