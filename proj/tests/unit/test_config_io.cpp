#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "vdem/config/scenario.hpp"
#include "vdem/errors.hpp"
#include "vdem/io/output.hpp"

using namespace vdem;
namespace fs = std::filesystem;

namespace {

const fs::path kConfigs = fs::path(VDEM_SOURCE_DIR) / "configs";

const char* kMinimal = R"(
[scenario]
kind = relax
[geometry]
shape = beam
length = 10
height = 1
nx = 10
ny = 2
[material]
model = standard_solid
E_inf = 4
E_1 = 6
xi = 18
nu = 0.35
[loads]
constraint = relaxation
stretch = 1
[network]
output_scale = 0.01
[stepping]
steps = 1
iterations_first = 5
iterations = 5
delta_t = 1
learning_rate = 1e-3
)";

std::vector<std::string> messages(const std::string& text, const std::vector<std::string>& ov = {}) {
  try {
    config::parse_config(text, ov);
  } catch (const ConfigError& e) {
    return e.messages();
  }
  return {};
}

bool mentions(const std::vector<std::string>& m, const std::string& key) {
  for (const auto& s : m)
    if (s.find(key) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("canonical configs validate and round trip") {
  std::size_t n = 0;
  for (const auto& e : fs::directory_iterator(kConfigs)) {
    if (e.path().extension() != ".cfg") continue;
    ++n;
    CAPTURE(e.path().filename().string());
    const auto c = config::load_config(e.path());
    CHECK(config::parse_config(config::serialize(c)) == c);
    CHECK(c.stepping.seed == 1);
    const auto sim = config::build_simulation(c);
    CHECK(sim->field().param_count() > 0);
  }
  CHECK(n == 9);
}

TEST_CASE("canonical configs carry the reference settings") {
  const auto relax = config::load_config(kConfigs / "relax.cfg");
  CHECK(relax.kind == config::ScenarioKind::Relax);
  CHECK(relax.stepping.delta_t == 1.0);
  CHECK(relax.stepping.steps == 9);
  CHECK(relax.material.xi / relax.material.E_1 == doctest::Approx(3.0));
  const auto shell = config::load_config(kConfigs / "shell_buckle.cfg");
  CHECK(shell.stepping.delta_t == 0.5);
  CHECK(shell.stepping.delta_t * shell.stepping.steps == doctest::Approx(12.0));
  CHECK(shell.loads.pressure == 1e-2);
  const auto grow = config::load_config(kConfigs / "growth_uniform.cfg");
  CHECK(grow.stepping.iterations == 400);
  CHECK(grow.material.instantaneous_modulus() == doctest::Approx(100.0));
  CHECK(config::load_config(kConfigs / "creep_buckle.cfg").stepping.learning_rate == 5e-3);
  CHECK(config::load_config(kConfigs / "beam_subcritical.cfg").loads.pressure == 1e-2);
}

TEST_CASE("overrides") {
  const auto c = config::parse_config(kMinimal, {"stepping.seed=9", "geometry.nx=12", "output.dir=/tmp/x"});
  CHECK(c.stepping.seed == 9);
  CHECK(c.geometry.nx == 12);
  CHECK(c.output.dir == "/tmp/x");
  CHECK(mentions(messages(kMinimal, {"stepping.seed"}), "stepping.seed"));
}

TEST_CASE("validation errors name their keys") {
  CHECK(messages(kMinimal).empty());
  CHECK(mentions(messages(kMinimal, {"material.nu=0.6"}), "material.nu"));
  const auto both = messages(kMinimal, {"material.nu=0.5", "geometry.colour=red"});
  CHECK(both.size() == 2);
  CHECK(mentions(both, "material.nu"));
  CHECK(mentions(both, "geometry.colour"));
  CHECK(mentions(messages(kMinimal, {"stepping.learning_rate=abc"}), "stepping.learning_rate"));
  CHECK(mentions(messages(kMinimal, {"geometry.nx=1"}), "geometry.nx"));
  CHECK(mentions(messages(kMinimal, {"scenario.kind=shell_buckle"}), "geometry.shape"));
  CHECK(mentions(messages(kMinimal, {"loads.constraint=quarter_ring"}), "loads.constraint"));
  CHECK_THROWS_AS(config::load_config("/nonexistent.cfg"), ConfigError);
}

TEST_CASE("output schema") {
  using kinematics::CoordinateSystem;
  CHECK(io::field_columns(CoordinateSystem::Cartesian, false) ==
        std::vector<std::string>{"x", "y", "u_x", "u_y", "sigma_xx", "sigma_yy", "sigma_xy", "sigma_zz"});
  const auto cyl = io::field_columns(CoordinateSystem::Cylindrical, true);
  CHECK(cyl.front() == "r");
  CHECK(cyl.back() == "g_theta");
  CHECK(cyl.size() == 10);
  CHECK(io::format_double(0.1) == "0.1");
  CHECK(std::stod(io::format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("run writer") {
  const fs::path dir = fs::temp_directory_path() / "vdem_writer_test";
  fs::remove_all(dir);
  auto c = config::parse_config(kMinimal, {"output.dir=" + dir.string()});
  auto sim = config::build_simulation(c);
  {
    io::RunWriter w(dir, c.name, {true, true, true});
    w.write_config(config::serialize(c));
    w.write_domain(sim->domain());
    sim->run([&](const solver::Snapshot& s, const solver::LossRecord& r) { w.on_step(sim->domain(), sim->field(), s, r); });
  }
  for (const char* f : {"loss_history.csv", "steps.csv", "domain.csv", "config.cfg", "fields_step0001.csv",
                        "fields_step0001.vtk", "surfaces_step0000.csv", "params_step0001.txt"})
    CHECK_MESSAGE(fs::exists(dir / f), f);

  std::ifstream loss(dir / "loss_history.csv");
  std::string header;
  std::getline(loss, header);
  CHECK(header == "step,time,iteration,energy");
  std::size_t rows = 0;
  for (std::string line; std::getline(loss, line);) ++rows;
  CHECK(rows == 10);

  std::ifstream fields(dir / "fields_step0001.csv");
  std::getline(fields, header);
  CHECK(header == "x,y,u_x,u_y,sigma_xx,sigma_yy,sigma_xy,sigma_zz");

  std::ifstream vtk(dir / "fields_step0001.vtk");
  std::getline(vtk, header);
  CHECK(header == "# vtk DataFile Version 3.0");
  std::stringstream body;
  body << vtk.rdbuf();
  CHECK(body.str().find("POINTS 20 double") != std::string::npos);
  CHECK(config::load_config(dir / "config.cfg") == c);
  fs::remove_all(dir);
}
