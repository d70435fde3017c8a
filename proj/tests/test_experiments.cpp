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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lctlab/bprofile.hpp"
#include "lctlab/errors.hpp"
#include "lctlab/experiments.hpp"
#include "lctlab/fixtures.hpp"
#include "lctlab/norms.hpp"
#include "lctlab/signal.hpp"

#include "oracle.hpp"

using namespace lctlab;

namespace {

SweepConfig base_sweep(const char* profile_kind) {
  SweepConfig cfg;
  if (std::string(profile_kind) == "constant") {
    cfg.profile = ProfilePair{"constant", [](double) { return 0.0; },
                              [](double) { return 1.0; }};
  } else if (std::string(profile_kind) == "linear_A") {
    cfg.profile = ProfilePair{"linear_A", [](double a) { return a; },
                              [](double) { return 1.0; }};
  } else {
    cfg.profile = ProfilePair{"jump_B", [](double a) { return a; },
                              [](double a) { return a > 0.0 ? 2.0 : 1.0; }};
  }
  for (int k = 0; k < 12; ++k) cfg.steps.push_back(std::ldexp(1.0, -k));
  const Grid g = make_grid(16.0, 1024);
  cfg.signals.emplace_back("gauss", fixtures::gaussian(g));
  return cfg;
}

double row_value(const ExperimentReport& r, const char* column,
                 std::size_t row) {
  for (std::size_t c = 0; c < r.columns.size(); ++c) {
    if (r.columns[c] == column) return r.rows.at(row).at(c);
  }
  throw std::runtime_error("no such column");
}

}  // namespace

TEST_CASE("constant profile: gap identically zero") {
  const ExperimentReport rep = l2_continuity_sweep(base_sweep("constant"));
  CHECK_FALSE(rep.flags.at("jump_detected"));
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    CHECK(row_value(rep, "gap", i) == 0.0);
  }
}

TEST_CASE("linear-A profile: gap decays linearly in the step") {
  const ExperimentReport rep = l2_continuity_sweep(base_sweep("linear_A"));
  CHECK(rep.flags.at("gap_monotone"));
  CHECK(rep.flags.at("gap_halving"));
  CHECK_FALSE(rep.flags.at("gap_lower_bound_violated"));
  const double expo = rep.metrics.at("exponent_gauss");
  CHECK(expo > 0.8);
  CHECK(expo < 1.2);
}

TEST_CASE("jump-B profile: gap bounded below by the Plancherel defect") {
  const ExperimentReport rep = l2_continuity_sweep(base_sweep("jump_B"));
  CHECK(rep.flags.at("jump_detected"));
  CHECK_FALSE(rep.flags.at("gap_lower_bound_violated"));
  const double bound = rep.metrics.at("jump_lower_bound");
  CHECK(bound ==
        doctest::Approx(std::sqrt(2.0 * M_PI) *
                        std::abs(std::sqrt(0.5) - 1.0)));
  // smallest steps still carry at least 0.9 of the defect
  CHECK(row_value(rep, "gap", rep.rows.size() - 1) >= 0.9 * bound);
}

TEST_CASE("pointwise probe: dual ladder diverges iff the weight is weak") {
  const SweepConfig cfg = base_sweep("linear_A");
  const SampledSignal& f = cfg.signals.front().second;

  const ExperimentReport weak = pointwise_probe(f, 0.3, cfg, L2Tag{});
  CHECK(weak.flags.at("dual_norm_diverges"));
  // truncated L2 norm of (1+t^2)^{-0} grows like T^{1/2}
  CHECK(weak.metrics.at("dual_exponent") == doctest::Approx(0.5).epsilon(0.05));
  CHECK(weak.flags.at("deviation_decreasing"));

  const ExperimentReport strong = pointwise_probe(f, 0.3, cfg, WeightedL2{1.0});
  CHECK_FALSE(strong.flags.at("dual_norm_diverges"));
  CHECK(strong.metrics.at("dual_final_increment") < 1e-2);

  CHECK_THROWS_AS(pointwise_probe(f, 0.3, cfg, HolderSeminorm{0.5}),
                  ConfigError);
}

TEST_CASE("maximal estimate: smoke on the Gaussian") {
  MaximalQuery q;
  q.profile = constant_one_profile(1.0);
  for (int j = 2; j <= 10; ++j) q.a_grid.push_back(std::ldexp(1.0, -j));
  for (int k = 0; k <= 64; ++k) q.u_grid.push_back(-2.0 + 4.0 * k / 64.0);
  const Grid g = make_grid(16.0, 1024);
  const SampledSignal f = fixtures::gaussian(g);
  const ExperimentReport rep = maximal_estimate(q, f);
  REQUIRE(rep.rows.size() == q.u_grid.size());
  // L_a -> identity as a -> 0, so L_* at u = 0 is at least f(0) = 1
  CHECK(rep.metrics.at("lp_norm") >= 0.99);
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    CHECK(row_value(rep, "l_star", i) < 3.0);
  }
}

TEST_CASE("maximal estimate: finite p integrates over the u grid") {
  MaximalQuery q;
  q.profile = constant_one_profile(1.0);
  q.a_grid = {0.25, 0.125};
  for (int k = 0; k <= 32; ++k) q.u_grid.push_back(-2.0 + 4.0 * k / 32.0);
  q.p = 2.0;
  const Grid g = make_grid(16.0, 1024);
  const ExperimentReport rep = maximal_estimate(q, fixtures::gaussian(g));
  CHECK(rep.metrics.at("lp_norm") > 0.5);
  CHECK(rep.metrics.at("p") == 2.0);
}

TEST_CASE("holder counterexample: witnesses survive, center point vanishes") {
  CounterexampleSpec spec;
  spec.K = 12;
  spec.u0 = 0.01;
  spec.profile = constant_one_profile(1.0);
  const Grid g = make_grid(1.0, 8192);
  spec.phi = fixtures::smooth_bump(g, 0.375, 0.125);
  const ExperimentReport rep = holder_counterexample_report(spec, 6, 9);
  CHECK(rep.flags.at("witness_scaled_ok"));
  CHECK(rep.flags.at("u0_outside_support"));
  CHECK(rep.metrics.at("f_at_u0_abs") <= 1e-12);
  CHECK(rep.metrics.at("holder_seminorm") > 0.0);
  const double int_phi = rep.metrics.at("int_phi");
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    CHECK(row_value(rep, "witness_scaled", i) >= 0.5 * std::abs(int_phi));
  }
}

TEST_CASE("holder counterexample: u0 outside the admissible range throws") {
  CounterexampleSpec spec;
  spec.K = 12;
  spec.u0 = 0.5;  // must stay below 1/(80 M)
  spec.profile = constant_one_profile(1.0);
  const Grid g = make_grid(1.0, 8192);
  spec.phi = fixtures::smooth_bump(g, 0.375, 0.125);
  CHECK_THROWS_AS(holder_counterexample_report(spec, 6, 9), ConfigError);
}

TEST_CASE("oscillatory integral check") {
  CHECK_THROWS_AS(oscillatory_integral_check(0.0, 0.0, 100.0),
                  DegenerateParameterError);
  CHECK_THROWS_AS(oscillatory_integral_check(0.0, 0.5, 1.0), ConfigError);

  const ExperimentReport rep = oscillatory_integral_check(1.0, 0.5, 50.0);
  CHECK(rep.metrics.at("ratio") > 0.0);
  CHECK(rep.metrics.at("ratio") < 10.0);
  CHECK(rep.flags.at("refinement_stable"));
}

TEST_CASE("ae convergence fraction decays with a") {
  const Grid g = make_grid(16.0, 1024);
  const SampledSignal f = fixtures::gaussian(g);
  const BProfile profile = constant_one_profile(1.0);
  const std::vector<double> a_seq{0.25, 0.125, 0.0625, 0.03125, 0.015625};
  const ExperimentReport rep =
      ae_convergence_fraction(f, profile, a_seq, 1e-2);
  CHECK(rep.flags.at("fraction_trend_down"));
  CHECK(rep.metrics.at("final_fraction") < 0.05);
}

TEST_CASE("wavepacket probe at small scale") {
  const ExperimentReport rep =
      wavepacket_probe(64.0, 0.25, sqrt_1pa2_profile(0.5, 0.5));
  CHECK(rep.flags.at("witness_ok"));
  CHECK(rep.flags.at("hs_exponent_ok"));
  CHECK(rep.metrics.at("witness_ratio_min") >= 0.9);
}

TEST_CASE("global probe at small scale") {
  const ExperimentReport rep =
      global_unboundedness_probe(64.0, 0.25, 4.0, sqrt_1pa2_profile(0.5, 0.5));
  CHECK(rep.flags.at("witness_ok"));
  CHECK(rep.flags.at("ratio_strictly_increasing"));
  CHECK(rep.metrics.at("hs_variation") < 1e-10);

  // constant b has no witness interval of positive measure
  CHECK_THROWS_AS(
      global_unboundedness_probe(64.0, 0.25, 4.0, constant_one_profile(1.0)),
      DegenerateParameterError);
  CHECK_THROWS_AS(global_unboundedness_probe(
                      64.0, 0.25, std::numeric_limits<double>::infinity(),
                      sqrt_1pa2_profile(0.5, 0.5)),
                  ConfigError);
}
