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

// Config-driven front end. One run per invocation:
//   lct <command> --config <path> [--out <dir>] [--log-level <lvl>]
// Exit codes: 0 success, 2 schema violation, 3 aliasing / resolution guard,
// 4 degenerate parameters.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lctlab/engine.hpp"
#include "lctlab/errors.hpp"
#include "lctlab/experiments.hpp"
#include "lctlab/fixtures.hpp"
#include "lctlab/fourier.hpp"
#include "lctlab/norms.hpp"
#include "lctlab/report.hpp"
#include "lctlab/signal_io.hpp"
#include "lctlab/subgroup.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace lctlab;

namespace {

enum LogLevel { kQuiet = 0, kWarn = 1, kInfo = 2 };

struct RunContext {
  fs::path out_dir;
  std::ofstream run_log;
  LogLevel level = kWarn;
  json config;

  void log(LogLevel lvl, const std::string& msg) {
    if (run_log) run_log << msg << "\n";
    if (lvl <= level) std::cerr << msg << "\n";
  }
};

Grid grid_from_json(const json& g) {
  if (!g.is_object()) throw ConfigError("grid block must be an object");
  return make_grid(g.value("T", 0.0), g.value("N", std::size_t{0}));
}

SampledSignal load_signal(const json& cfg) {
  if (cfg.contains("signal")) {
    return read_signal_json_file(cfg.at("signal").get<std::string>());
  }
  if (!cfg.contains("fixture")) {
    throw ConfigError("config needs a \"signal\" path or a \"fixture\" block");
  }
  const json& fx = cfg.at("fixture");
  const Grid grid = grid_from_json(fx.at("grid"));
  const std::string name = fx.value("name", "gaussian");
  if (name == "gaussian") return fixtures::gaussian(grid);
  if (name == "smooth_bump") return fixtures::smooth_bump(grid);
  if (name == "hermite4_gaussian") return fixtures::hermite4_gaussian(grid);
  if (name == "sqrt_cusp") return fixtures::sqrt_cusp(grid);
  if (name == "lacunary_cos") return fixtures::lacunary_cos(grid);
  if (name == "interior_cusp") return fixtures::interior_cusp(grid);
  throw ConfigError("unknown fixture: " + name);
}

BProfile profile_from_json(const json& p) {
  const std::string name = p.value("name", "constant_one");
  if (name == "constant_one") {
    return constant_one_profile(p.value("delta", 1.0));
  }
  if (name == "sqrt_1p4a2") return sqrt_1p4a2_profile(p.value("delta", 1.0));
  if (name == "sqrt_1pa2") {
    return sqrt_1pa2_profile(p.value("a0", 0.5), p.value("delta", 0.5));
  }
  throw ConfigError("unknown profile: " + name);
}

ProfilePair sweep_profile_from_json(const json& p, double alpha0) {
  const std::string name = p.value("name", "linear_A");
  if (name == "linear_A") {
    return ProfilePair{"linear_A", [](double a) { return a; },
                       [](double) { return 1.0; }};
  }
  if (name == "constant") {
    return ProfilePair{"constant", [](double) { return 0.0; },
                       [](double) { return 1.0; }};
  }
  if (name == "jump_B") {
    const double hi = p.value("B_plus", 2.0);
    return ProfilePair{"jump_B", [](double a) { return a; },
                       [alpha0, hi](double a) {
                         return a > alpha0 ? hi : 1.0;
                       }};
  }
  throw ConfigError("unknown sweep profile: " + name);
}

std::vector<double> steps_from_json(const json& cfg) {
  std::vector<double> steps;
  if (cfg.contains("steps") && cfg.at("steps").is_array()) {
    for (const auto& v : cfg.at("steps")) steps.push_back(v.get<double>());
  } else {
    const int count = cfg.value("step_count", 13);
    for (int k = 0; k < count; ++k) steps.push_back(std::ldexp(1.0, -k));
  }
  return steps;
}

void emit_report(RunContext& ctx, const ExperimentReport& rep) {
  ExperimentReport out = rep;
  out.config_echo = ctx.config.dump();
  {
    std::ofstream csv(ctx.out_dir / "report.csv");
    write_csv(out, csv);
  }
  {
    std::ofstream side(ctx.out_dir / "report.json");
    write_json_sidecar(out, side);
  }
  if (out.columns.size() >= 2 && !out.rows.empty()) {
    std::ofstream plot(ctx.out_dir / "plot.dat");
    write_plot_data(out, out.columns[0], out.columns[1], plot);
  }
  ctx.log(kInfo, "wrote " + (ctx.out_dir / "report.csv").string());
}

int run_transform(RunContext& ctx) {
  const json& cfg = ctx.config;
  const SampledSignal f = load_signal(cfg);
  SampledSignal out = [&] {
    const std::string kind = cfg.value("kind", "frft");
    if (kind == "frft") return frft(cfg.at("alpha").get<double>(), f);
    if (kind == "lct") {
      const json& p = cfg.at("params");
      return lct_chirp(unitary_params(p.at("A").get<double>(),
                                      p.at("B").get<double>(),
                                      p.at("C").get<double>()),
                       f);
    }
    throw ConfigError("transform kind must be \"frft\" or \"lct\"");
  }();
  {
    std::ofstream csv(ctx.out_dir / "transform.csv");
    write_signal_csv(out, csv);
  }
  {
    std::ofstream js(ctx.out_dir / "transform.json");
    write_signal_json(out, js);
  }
  ExperimentReport rep;
  rep.name = "transform";
  rep.columns = {"l2_in", "l2_out"};
  rep.add_row({l2_norm(f), l2_norm(out)});
  emit_report(ctx, rep);
  return 0;
}

int run_verify_group(RunContext& ctx) {
  const json& cfg = ctx.config;
  const SubgroupSpec spec =
      parse_subgroup_spec(cfg.at("subgroup").dump());
  const double alpha = cfg.at("alpha").get<double>();
  const double beta = cfg.at("beta").get<double>();
  const GroupResidual res = group_residual(spec, alpha, beta);
  ExperimentReport rep;
  rep.name = "verify_group";
  rep.columns = {"alpha", "beta", "res_A", "res_B", "res_C", "res_D",
                 "operator_residual"};
  double op_res = -1.0;
  if (cfg.contains("fixture") || cfg.contains("signal")) {
    op_res = operator_group_check(spec, alpha, beta, load_signal(cfg));
  }
  rep.add_row({alpha, beta, res.A, res.B, res.C, res.D, op_res});
  rep.metrics["residual_max"] = res.max();
  rep.flags["group_law_ok"] = res.max() <= 1e-9;
  emit_report(ctx, rep);
  return 0;
}

int run_sweep_l2(RunContext& ctx) {
  const json& cfg = ctx.config;
  SweepConfig sweep;
  sweep.alpha0 = cfg.value("alpha0", 0.0);
  sweep.profile = sweep_profile_from_json(cfg.value("profile", json::object()),
                                          sweep.alpha0);
  sweep.steps = steps_from_json(cfg);
  sweep.signals.emplace_back("input", load_signal(cfg));
  emit_report(ctx, l2_continuity_sweep(sweep));
  return 0;
}

int run_pointwise(RunContext& ctx) {
  const json& cfg = ctx.config;
  SweepConfig sweep;
  sweep.alpha0 = cfg.value("alpha0", 0.0);
  sweep.profile = sweep_profile_from_json(cfg.value("profile", json::object()),
                                          sweep.alpha0);
  sweep.steps = steps_from_json(cfg);
  const SampledSignal f = load_signal(cfg);
  sweep.signals.emplace_back("input", f);
  const json sp = cfg.value("space", json::object());
  const std::string kind = sp.value("kind", "L2");
  NormSpec space = L2Tag{};
  if (kind == "weighted") {
    space = WeightedL2{sp.value("r", 0.0)};
  } else if (kind == "sobolev") {
    space = Sobolev{sp.value("s", 0.0)};
  } else if (kind != "L2") {
    throw ConfigError("space kind must be L2, weighted or sobolev");
  }
  emit_report(ctx, pointwise_probe(f, cfg.value("u", 0.0), sweep, space));
  return 0;
}

int run_maximal(RunContext& ctx) {
  const json& cfg = ctx.config;
  MaximalQuery q;
  q.profile = profile_from_json(cfg.value("profile", json::object()));
  if (cfg.contains("a_grid") && cfg.at("a_grid").is_array()) {
    for (const auto& v : cfg.at("a_grid")) q.a_grid.push_back(v.get<double>());
  } else {
    const int j_lo = cfg.value("a_j_lo", 2);
    const int j_hi = cfg.value("a_j_hi", 12);
    for (int j = j_lo; j <= j_hi; ++j) {
      q.a_grid.push_back(q.profile.a0 + q.profile.delta * std::ldexp(1.0, -j));
    }
  }
  const json& ug = cfg.at("u_grid");
  const double lo = ug.at("min").get<double>();
  const double hi = ug.at("max").get<double>();
  const std::size_t count = ug.value("count", std::size_t{129});
  if (!(hi > lo) || count < 2) throw ConfigError("bad u_grid block");
  for (std::size_t i = 0; i < count; ++i) {
    q.u_grid.push_back(lo + (hi - lo) * static_cast<double>(i) /
                                static_cast<double>(count - 1));
  }
  if (cfg.contains("p") && cfg.at("p").is_number()) {
    q.p = cfg.at("p").get<double>();
  }
  const std::string route = cfg.value("route", "auto");
  if (route == "spectral") {
    q.route = MaximalRoute::Spectral;
  } else if (route == "time") {
    q.route = MaximalRoute::TimeDomain;
  } else if (route != "auto") {
    throw ConfigError("route must be auto, spectral or time");
  }
  emit_report(ctx, maximal_estimate(q, load_signal(cfg)));
  return 0;
}

int run_counterexample(RunContext& ctx) {
  const json& cfg = ctx.config;
  CounterexampleSpec spec;
  spec.K = cfg.value("K", 20);
  spec.u0 = cfg.value("u0", 0.01);
  spec.profile = profile_from_json(cfg.value("profile", json::object()));
  const Grid grid = grid_from_json(cfg.at("grid"));
  // built-in bump on [1/4, 1/2], normalized so the grid integral is 0.1
  SampledSignal phi = sample(grid, [](double t) {
    const double x = (t - 0.375) * 16.0;
    return cplx(std::abs(x) < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - x * x)) : 0.0,
                0.0);
  });
  double mass = 0.0;
  for (const cplx& v : phi.values) mass += v.real() * grid.spacing();
  for (cplx& v : phi.values) v *= 0.1 / mass;
  spec.phi = std::move(phi);
  emit_report(ctx, holder_counterexample_report(spec, cfg.value("n_lo", 6),
                                                cfg.value("n_hi", 12)));
  return 0;
}

int run_lemma_integral(RunContext& ctx) {
  const json& cfg = ctx.config;
  emit_report(ctx, oscillatory_integral_check(cfg.at("a").get<double>(),
                                              cfg.at("b").get<double>(),
                                              cfg.value("N_limit", 100.0)));
  return 0;
}

int run_wavepacket(RunContext& ctx) {
  const json& cfg = ctx.config;
  emit_report(ctx,
              wavepacket_probe(cfg.value("N_scale", 512.0),
                               cfg.value("s", 0.25),
                               profile_from_json(cfg.value(
                                   "profile",
                                   json{{"name", "sqrt_1pa2"}}))));
  return 0;
}

int run_global_probe(RunContext& ctx) {
  const json& cfg = ctx.config;
  emit_report(ctx,
              global_unboundedness_probe(
                  cfg.value("N_scale", 1024.0), cfg.value("s", 0.25),
                  cfg.value("p", 4.0),
                  profile_from_json(cfg.value(
                      "profile", json{{"name", "sqrt_1pa2"}}))));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linear canonical transform toolbox"};
  app.require_subcommand(1);

  std::string config_path, out_dir = ".", log_level = "warn";
  if (const char* env = std::getenv("LCT_OUT_DIR")) out_dir = env;
  if (const char* env = std::getenv("LCT_LOG_LEVEL")) log_level = env;

  const std::vector<std::pair<std::string, int (*)(RunContext&)>> commands = {
      {"transform", run_transform},
      {"verify-group", run_verify_group},
      {"sweep-l2", run_sweep_l2},
      {"pointwise", run_pointwise},
      {"maximal", run_maximal},
      {"counterexample", run_counterexample},
      {"lemma-integral", run_lemma_integral},
      {"wavepacket", run_wavepacket},
      {"global-probe", run_global_probe},
  };
  for (const auto& [name, fn] : commands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "JSON run config")->required();
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--log-level", log_level, "quiet|warn|info");
  }

  CLI11_PARSE(app, argc, argv);

  RunContext ctx;
  ctx.out_dir = out_dir;
  if (log_level == "quiet") {
    ctx.level = kQuiet;
  } else if (log_level == "info") {
    ctx.level = kInfo;
  } else if (log_level != "warn") {
    std::cerr << "unknown log level: " << log_level << "\n";
    return 2;
  }

  try {
    fs::create_directories(ctx.out_dir);
    ctx.run_log.open(ctx.out_dir / "run.log");
    set_warning_sink([&ctx](const std::string& msg) {
      ctx.log(kWarn, "[warn] " + msg);
    });

    std::ifstream in(config_path);
    if (!in) throw ConfigError("cannot open config: " + config_path);
    try {
      ctx.config = json::parse(in);
    } catch (const json::exception& e) {
      throw ConfigError(std::string("config parse failure: ") + e.what());
    }
    if (!ctx.config.contains("seed")) ctx.config["seed"] = 0;

    for (const auto& [name, fn] : commands) {
      if (app.get_subcommand(name)->parsed()) {
        const int rc = fn(ctx);
        ctx.log(kInfo, name + " finished");
        return rc;
      }
    }
    std::cerr << "no command selected\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    if (ctx.run_log) ctx.run_log << "config error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    // missing or mistyped config fields surface as schema violations
    std::cerr << "config error: " << e.what() << "\n";
    if (ctx.run_log) ctx.run_log << "config error: " << e.what() << "\n";
    return 2;
  } catch (const AliasingError& e) {
    std::cerr << "aliasing error: " << e.what() << "\n";
    if (ctx.run_log) ctx.run_log << "aliasing error: " << e.what() << "\n";
    return 3;
  } catch (const ResolutionError& e) {
    std::cerr << "resolution error: " << e.what() << "\n";
    if (ctx.run_log) ctx.run_log << "resolution error: " << e.what() << "\n";
    return 3;
  } catch (const DegenerateParameterError& e) {
    std::cerr << "degenerate parameters: " << e.what() << "\n";
    if (ctx.run_log) ctx.run_log << "degenerate parameters: " << e.what()
                                 << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
