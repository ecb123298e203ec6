#ifndef VDEM_SOLVER_SIMULATION_HPP
#define VDEM_SOLVER_SIMULATION_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vdem/domain/domain.hpp"
#include "vdem/field/neural_field.hpp"
#include "vdem/growth/growth.hpp"
#include "vdem/material/material.hpp"
#include "vdem/solver/adam.hpp"
#include "vdem/solver/potential.hpp"

namespace vdem::solver {

struct StepConfig {
  double delta_t = 1.0;
  int steps = 1;              // time steps after the initial state
  int iterations_first = 3000;
  int iterations = 1000;
  double learning_rate = 1e-3;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_eps = 1e-8;
  std::uint64_t seed = 0;
  bool warm_start = true;

  void validate() const;
  bool operator==(const StepConfig&) const = default;
};

struct LossRecord {
  int step = 0;
  double time = 0.0;
  std::vector<double> energy;  // one entry per iteration, before the update
  double converged = 0.0;
  EnergyTerms terms;  // of the converged state
  double wall_seconds = 0.0;
  double max_displacement = 0.0;
  double final_learning_rate = 0.0;
  int guard_triggers = 0;
};

/// Displacement samples on a named boundary set.
struct SurfaceSample {
  std::vector<domain::Point2> x;
  std::vector<std::array<double, 2>> u;
};

struct Snapshot {
  int step = 0;
  double time = 0.0;
  std::vector<std::array<double, 2>> u;
  // Cauchy stress in the component frame: 00, 11, 01, 22 (out of plane).
  std::vector<std::array<double, 4>> sigma;
  std::vector<double> g_r, g_theta;  // empty without growth
  std::map<std::string, SurfaceSample> surfaces;
  EnergyTerms energy;
};

struct SimulationRecord {
  std::vector<Snapshot> snapshots;
  std::vector<LossRecord> losses;
};

/**
 * Incremental viscoelastic loop. Step 0 solves at t = 0; step i > 0 solves at
 * t_i = i dt with moduli frozen at t_i. With growth, step i > 0 trains over
 * [t_{i-1}, t_i] and advances the growth ratios after every iteration with
 * dt / iterations, using the moduli at the current sub-step time.
 */
class Simulation {
 public:
  Simulation(domain::Domain domain, field::NeuralField field, material::MaterialModel material, Loads loads,
             std::optional<growth::GrowthParameters> growth, StepConfig step);
  Simulation(const Simulation&) = delete;
  Simulation& operator=(const Simulation&) = delete;

  /// Trains step i and returns its loss record; steps must run in order.
  LossRecord run_time_step(int i);
  Snapshot snapshot(int i) const;

  /// All steps; the observer sees each snapshot and loss record as produced.
  SimulationRecord run(const std::function<void(const Snapshot&, const LossRecord&)>& observer = {});

  const domain::Domain& domain() const noexcept { return domain_; }
  const field::NeuralField& field() const noexcept { return field_; }
  field::NeuralField& field() noexcept { return field_; }
  const material::MaterialModel& material() const noexcept { return material_; }
  const StepConfig& step_config() const noexcept { return step_; }
  const growth::GrowthState* growth() const noexcept { return growth_ ? &*growth_ : nullptr; }
  double time_of(int i) const { return step_.delta_t * i; }

 private:
  domain::Domain domain_;
  field::NeuralField field_;
  material::MaterialModel material_;
  Loads loads_;
  std::optional<growth::GrowthState> growth_;
  StepConfig step_;
  PotentialAssembler assembler_;
  AdamState adam_;
  int next_step_ = 0;
  double reference_energy_ = 0.0;  // energy scale of the untrained field
};

}  // namespace vdem::solver

#endif  // VDEM_SOLVER_SIMULATION_HPP
