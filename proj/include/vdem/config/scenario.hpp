#ifndef VDEM_CONFIG_SCENARIO_HPP
#define VDEM_CONFIG_SCENARIO_HPP

#include <array>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "vdem/field/boundary.hpp"
#include "vdem/field/neural_field.hpp"
#include "vdem/growth/growth.hpp"
#include "vdem/material/material.hpp"
#include "vdem/solver/simulation.hpp"

namespace vdem::config {

enum class ScenarioKind { Relax, Creep, BeamBuckle, ShellBuckle, GrowthUniform, GrowthDiff };

std::string to_string(ScenarioKind k);
ScenarioKind parse_scenario_kind(const std::string& s);

enum class Shape { Beam, Annulus };

struct GeometryConfig {
  Shape shape = Shape::Beam;
  double length = 10.0;
  double height = 1.0;
  int nx = 100;
  int ny = 10;
  double r_inner = 0.9;
  double r_outer = 1.0;
  double theta_span_deg = 90.0;
  int nr = 20;
  int nt = 90;

  bool operator==(const GeometryConfig&) const = default;
};

enum class MaterialForm { StandardSolid, Elastic, Prony };

struct MaterialConfig {
  MaterialForm form = MaterialForm::StandardSolid;
  double E_inf = 0.0;
  double E_1 = 0.0;
  double xi = 0.0;
  double E = 0.0;  // elastic form
  double nu = 0.0;
  double G_inf = 0.0;       // prony form
  double lambda_inf = 0.0;  // prony form
  std::vector<material::PronyBranch> branches;

  material::MaterialModel build() const;
  /// Instantaneous Young's modulus E0.
  double instantaneous_modulus() const;
  bool operator==(const MaterialConfig&) const = default;
};

struct LoadsConfig {
  field::BoundaryConstruction::Kind constraint = field::BoundaryConstruction::Kind::None;
  double stretch = 0.0;   // relaxation end displacement
  double pressure = 0.0;  // magnitude
  std::string boundary;   // boundary set carrying the pressure
  bool compression = true;

  bool operator==(const LoadsConfig&) const = default;
};

struct GrowthConfig {
  bool enabled = false;
  growth::GrowthLaw law = growth::GrowthLaw::Isotropic;
  double k = 0.0;
  double b_g = 0.0;
  bool b_g_relative = false;  // b_g given as a fraction of E0
  growth::GrowthIntegrator integrator = growth::GrowthIntegrator::Implicit;

  bool operator==(const GrowthConfig&) const = default;
};

struct NetworkConfig {
  std::vector<int> layers = field::default_layer_sizes();
  field::NetworkMode mode = field::NetworkMode::Single;
  std::array<double, 2> output_scale{1.0, 1.0};

  bool operator==(const NetworkConfig&) const = default;
};

struct OutputConfig {
  std::string dir = "out";
  bool vtk = true;
  bool fields = true;
  bool params = true;

  bool operator==(const OutputConfig&) const = default;
};

struct ScenarioConfig {
  ScenarioKind kind = ScenarioKind::Relax;
  std::string name;
  GeometryConfig geometry;
  MaterialConfig material;
  LoadsConfig loads;
  GrowthConfig growth;
  NetworkConfig network;
  solver::StepConfig stepping;
  OutputConfig output;

  bool operator==(const ScenarioConfig&) const = default;
};

/**
 * Parses and validates INI text. Overrides are "section.key=value" strings
 * applied before validation. Throws ConfigError listing every problem.
 */
ScenarioConfig parse_config(std::string_view text, const std::vector<std::string>& overrides = {});
ScenarioConfig load_config(const std::filesystem::path& path, const std::vector<std::string>& overrides = {});

/// Canonical text form; parse_config(serialize(c)) == c.
std::string serialize(const ScenarioConfig& c);

domain::Domain build_domain(const ScenarioConfig& c);
solver::Loads build_loads(const ScenarioConfig& c, const domain::Domain& d);
std::unique_ptr<solver::Simulation> build_simulation(const ScenarioConfig& c);

}  // namespace vdem::config

#endif  // VDEM_CONFIG_SCENARIO_HPP
