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

#include "lctlab/lct_params.hpp"
#include "lctlab/signal.hpp"

namespace lctlab {

/// The three canonical one-parameter families of LCT subgroups.
enum class Family { TrigI, ParabolicII, HyperbolicIII };

/// Family tag plus the frequency/scale/shear knobs:
///   I   [cot(w a)/l - g,  csc(w a)/l,  cot(w a)/l + g]
///   II  [1/(l a) - g,     1/(l a),     1/(l a) + g]
///   III [coth(w a)/l - g, csch(w a)/l, coth(w a)/l + g]
struct SubgroupSpec {
  Family family = Family::TrigI;
  double omega = 1.0;   // ignored by family II
  double lambda = 1.0;  // nonzero
  double gamma = 0.0;
};

void validate(const SubgroupSpec& spec);

/// Absolute deviations in the four composition equations.
struct GroupResidual {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  double D = 0.0;
  double max() const;
};

/// Parameters of the family member at alpha, with the group-consistent
/// normalizer from d_solution. Throws DegenerateParameterError within
/// pole_tol of a pole (family I: w*a in Z*pi; II, III: a = 0).
LCTParams family_params(const SubgroupSpec& spec, double alpha,
                        double pole_tol = 1e-6);

/// Normalizer solving the multiplicative composition equation, with modulus
/// pinned to the unitary constraint |D| = sqrt(|B|/(2 pi)). Branch-consistent
/// on the principal interval of each family (I: w*a in (-pi, pi) minus 0;
/// II, III: fixed sign of a).
cplx d_solution(const SubgroupSpec& spec, double alpha, double pole_tol = 1e-6);

/// q after p (p applied first):
///   A = A_p - B_p^2/(A_q + C_p),    B = B_p B_q/(A_q + C_p),
///   C = C_p - B_p^2/(A_q + C_p),    D = sqrt(2 pi i) D_p D_q (A_q + C_p)^{-1/2}.
/// Throws DegenerateParameterError when |A_q + C_p| < denom_tol.
LCTParams compose(const LCTParams& q, const LCTParams& p,
                  double denom_tol = 1e-12);

/// Componentwise |compose(P(beta), P(alpha)) - P(alpha+beta)|.
GroupResidual group_residual(const SubgroupSpec& spec, double alpha,
                             double beta);

/// Operator-level group defect || L_a(L_b f) - L_{a+b} f ||_{L2} / ||f||_{L2}
/// via the chirp path, with the outer application evaluated by direct sums
/// on the natural grid of L_{a+b} f restricted to the window where the
/// quadrature resolves the phase. |alpha| or |beta| below identity_tol is
/// treated as the identity operator.
double operator_group_check(const SubgroupSpec& spec, double alpha, double beta,
                            const SampledSignal& f, double identity_tol = 1e-9);

}  // namespace lctlab
