// Command-line driver: scenario runs, gradient check and oracle tables.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vdem/config/scenario.hpp"
#include "vdem/errors.hpp"
#include "vdem/io/output.hpp"
#include "vdem/oracles/oracles.hpp"
#include "vdem/solver/diagnostics.hpp"
#include "vdem/solver/gradcheck.hpp"

using namespace vdem;

namespace {

struct RunOptions {
  std::string config;
  std::string out;
  std::vector<std::string> overrides;
  long long seed = -1;
  int steps = -1;
};

void add_common(CLI::App* sub, RunOptions& o, const std::string& default_config) {
  o.config = default_config;
  sub->add_option("--config", o.config, "scenario config file")->capture_default_str();
  sub->add_option("--seed", o.seed, "network initialization seed");
  sub->add_option("--out", o.out, "output directory");
  sub->add_option("--steps", o.steps, "number of time steps after t = 0");
  sub->add_option("--override", o.overrides, "section.key=value, repeatable");
}

config::ScenarioConfig load(const RunOptions& o) {
  std::vector<std::string> ov = o.overrides;
  if (o.seed >= 0) ov.push_back("stepping.seed=" + std::to_string(o.seed));
  if (o.steps >= 0) ov.push_back("stepping.steps=" + std::to_string(o.steps));
  if (!o.out.empty()) ov.push_back("output.dir=" + o.out);
  return config::load_config(o.config, ov);
}

// One-line scenario-specific progress report.
std::string describe(const config::ScenarioConfig& c, const solver::Simulation& sim, const solver::Snapshot& s) {
  char buf[256];
  const auto& g = c.geometry;
  std::vector<double> th, v;
  switch (c.kind) {
    case config::ScenarioKind::Relax: {
      const double sxx = solver::band_mean_stress(sim.domain(), s, g.length / 3.0, 2.0 * g.length / 3.0);
      std::snprintf(buf, sizeof buf, "sigma_xx(center) %.6g", sxx);
      break;
    }
    case config::ScenarioKind::Creep: {
      const auto u = solver::tip_displacement(sim.field(), g.length, g.height);
      std::snprintf(buf, sizeof buf, "u_x(L)/L %.6g", u[0] / g.length);
      break;
    }
    case config::ScenarioKind::BeamBuckle: {
      const auto u = solver::tip_displacement(sim.field(), g.length, g.height);
      std::snprintf(buf, sizeof buf, "u_y(L)/h %.6g  u_x(L) %.6g", u[1] / g.height, u[0]);
      break;
    }
    case config::ScenarioKind::ShellBuckle: {
      solver::surface_component(s, "outer_surface", 0, th, v);
      const auto a = solver::cosine_modes(th, v, g.theta_span_deg / 180.0 * std::numbers::pi, 12);
      std::snprintf(buf, sizeof buf, "mean u_r %.6g  spread %.4g  dominant mode %.4g", a[0],
                    solver::relative_spread(v), solver::dominant_mode_amplitude(a, 1));
      break;
    }
    case config::ScenarioKind::GrowthUniform:
    case config::ScenarioKind::GrowthDiff: {
      solver::surface_component(s, "inner_surface", 0, th, v);
      for (double& x : v) x += g.r_inner;
      const auto a = solver::cosine_modes(th, v, g.theta_span_deg / 180.0 * std::numbers::pi, 24);
      std::snprintf(buf, sizeof buf, "mean g_r %.6g  g_theta %.6g  fold %.4g", sim.growth()->mean_g_r(),
                    sim.growth()->mean_g_theta(), solver::dominant_mode_amplitude(a, 2) / a[0]);
      break;
    }
  }
  return buf;
}

int run_scenario(const RunOptions& o, config::ScenarioKind expected) {
  const config::ScenarioConfig c = load(o);
  if (c.kind != expected)
    throw ConfigError({"scenario.kind: '" + config::to_string(c.kind) + "' does not match this subcommand ('" +
                       config::to_string(expected) + "')"});
  auto sim = config::build_simulation(c);
  io::RunWriter writer(c.output.dir, c.name, {c.output.fields, c.output.vtk, c.output.params});
  writer.write_config(config::serialize(c));
  writer.write_domain(sim->domain());
  std::cout << c.name << ": " << sim->domain().points().size() << " points, " << sim->field().param_count()
            << " parameters, " << c.stepping.steps + 1 << " steps -> " << c.output.dir << "\n";
  sim->run([&](const solver::Snapshot& s, const solver::LossRecord& r) {
    writer.on_step(sim->domain(), sim->field(), s, r);
    std::printf("step %3d  t %8.4g  energy % .8e  %s  (%.1f s)\n", r.step, r.time, r.converged,
                describe(c, *sim, s).c_str(), r.wall_seconds);
    std::fflush(stdout);
  });
  return 0;
}

int run_gradcheck(const RunOptions& o, int count, int seeds) {
  const config::ScenarioConfig c = load(o);
  auto sim = config::build_simulation(c);
  const auto moduli = sim->material().instantaneous();
  const auto loads = config::build_loads(c, sim->domain());
  double worst = 0.0, worst_jac = 0.0;
  for (int k = 0; k < seeds; ++k) {
    const std::uint64_t seed = c.stepping.seed + static_cast<std::uint64_t>(k);
    sim->field().init_params(seed);
    const auto r = solver::gradient_check(sim->field(), sim->domain(), moduli, loads, seed,
                                          static_cast<std::size_t>(count));
    std::printf("seed %llu  params %zu  max rel err %.3e  points %zu  max jacobian err %.3e\n",
                static_cast<unsigned long long>(seed), r.parameters_checked, r.max_relative_error,
                r.points_checked, r.max_jacobian_error);
    worst = std::max(worst, r.max_relative_error);
    worst_jac = std::max(worst_jac, r.max_jacobian_error);
  }
  const bool ok = worst < 1e-4 && worst_jac < 1e-7;
  std::printf("gradcheck %s  (max rel %.3e, max jacobian %.3e)\n", ok ? "PASS" : "FAIL", worst, worst_jac);
  return ok ? 0 : 1;
}

int run_oracle(const RunOptions& o, const std::string& quantity, double t_max, double dt) {
  const config::ScenarioConfig c = load(o);
  const auto& m = c.material;
  if (quantity == "relaxation" || quantity == "creep") {
    if (m.form != config::MaterialForm::StandardSolid) throw ConfigError({"material.model: needs standard_solid"});
    const double tau = m.xi / m.E_1;
    std::vector<double> t;
    for (int i = 0; i * dt <= t_max + 1e-12; ++i) t.push_back(i * dt);
    const auto r = quantity == "relaxation"
                       ? oracles::tabulate_relaxation(m.E_inf, m.E_1, tau, c.loads.stretch / c.geometry.length, t)
                       : oracles::tabulate_creep(m.E_inf, m.E_1, tau, c.loads.pressure, t);
    std::cout << "time," << r.quantity << "\n";
    for (std::size_t i = 0; i < t.size(); ++i)
      std::cout << io::format_double(r.times[i]) << "," << io::format_double(r.values[i]) << "\n";
    return 0;
  }
  const auto model = m.build();
  if (quantity == "euler") {
    std::cout << "time,E,euler_pressure\n";
    for (int i = 0; i * dt <= t_max + 1e-12; ++i) {
      const double E = model.youngs_modulus(i * dt);
      std::cout << io::format_double(i * dt) << "," << io::format_double(E) << ","
                << io::format_double(oracles::euler_buckling_pressure(E, c.geometry.length, c.geometry.height))
                << "\n";
    }
    return 0;
  }
  if (quantity == "shell") {
    std::cout << "time,E,shell_pressure\n";
    const double a = c.geometry.r_outer - c.geometry.r_inner;
    for (int i = 0; i * dt <= t_max + 1e-12; ++i) {
      const double E = model.youngs_modulus(i * dt);
      std::cout << io::format_double(i * dt) << "," << io::format_double(E) << ","
                << io::format_double(oracles::shell_buckling_pressure(E, m.nu, a, 2.0 * c.geometry.r_outer)) << "\n";
    }
    return 0;
  }
  if (quantity == "creep_buckling_time") {
    if (m.form != config::MaterialForm::StandardSolid) throw ConfigError({"material.model: needs standard_solid"});
    const auto t = oracles::creep_buckling_time(m.E_inf, m.E_1, m.xi / m.E_1, c.geometry.length, c.geometry.height,
                                                c.loads.pressure);
    std::cout << "pressure,creep_buckling_time\n" << io::format_double(c.loads.pressure) << ","
              << (t ? io::format_double(*t) : std::string("none")) << "\n";
    return 0;
  }
  throw ConfigError({"--quantity: expected relaxation, creep, euler, shell or creep_buckling_time"});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Incremental viscoelastic energy solver with neural displacement fields"};
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* config;
    config::ScenarioKind kind;
    const char* help;
  };
  const std::vector<Sub> subs{
      {"relax", "configs/relax.cfg", config::ScenarioKind::Relax, "stress relaxation of a stretched beam"},
      {"creep", "configs/creep.cfg", config::ScenarioKind::Creep, "tensile creep of a beam"},
      {"beam-buckle", "configs/creep_buckle.cfg", config::ScenarioKind::BeamBuckle, "axially loaded beam"},
      {"shell-buckle", "configs/shell_buckle.cfg", config::ScenarioKind::ShellBuckle, "pressurized quarter ring"},
      {"growth-uniform", "configs/growth_uniform.cfg", config::ScenarioKind::GrowthUniform,
       "isotropic growth of a half annulus"},
      {"growth-diff", "configs/growth_diff.cfg", config::ScenarioKind::GrowthDiff,
       "differential growth of a half annulus"},
  };
  std::vector<RunOptions> opts(subs.size());
  std::vector<CLI::App*> apps;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    apps.push_back(app.add_subcommand(subs[i].name, subs[i].help));
    add_common(apps.back(), opts[i], subs[i].config);
  }

  RunOptions gopt;
  int gcount = 20, gseeds = 5;
  auto* grad = app.add_subcommand("gradcheck", "autodiff gradient vs central differences");
  add_common(grad, gopt, "configs/beam_buckle_elastic.cfg");
  grad->add_option("--count", gcount, "parameters per seed")->capture_default_str();
  grad->add_option("--seeds", gseeds, "number of seeds")->capture_default_str();

  RunOptions oopt;
  std::string quantity = "relaxation";
  double t_max = 9.0, dt = 1.0;
  auto* orc = app.add_subcommand("oracle", "closed-form reference tables as CSV");
  add_common(orc, oopt, "configs/relax.cfg");
  orc->add_option("--quantity", quantity, "relaxation, creep, euler, shell or creep_buckling_time")
      ->capture_default_str();
  orc->add_option("--t-max", t_max, "last tabulated time")->capture_default_str();
  orc->add_option("--dt", dt, "table spacing")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    for (std::size_t i = 0; i < subs.size(); ++i)
      if (apps[i]->parsed()) return run_scenario(opts[i], subs[i].kind);
    if (grad->parsed()) return run_gradcheck(gopt, gcount, gseeds);
    if (orc->parsed()) return run_oracle(oopt, quantity, t_max, dt);
  } catch (const ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
