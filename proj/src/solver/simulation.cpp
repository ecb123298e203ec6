#include "vdem/solver/simulation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "vdem/errors.hpp"

namespace vdem::solver {

void StepConfig::validate() const {
  if (!(delta_t > 0.0)) throw DomainError("delta_t must be positive");
  if (steps < 0) throw DomainError("steps must be >= 0");
  if (iterations < 1 || iterations_first < 1) throw DomainError("iterations must be >= 1");
  if (!(learning_rate > 0.0)) throw DomainError("learning_rate must be positive");
  if (!(adam_beta1 >= 0.0 && adam_beta1 < 1.0) || !(adam_beta2 >= 0.0 && adam_beta2 < 1.0))
    throw DomainError("adam betas must lie in [0, 1)");
  if (!(adam_eps > 0.0)) throw DomainError("adam_eps must be positive");
}

Simulation::Simulation(domain::Domain domain, field::NeuralField field, material::MaterialModel material, Loads loads,
                       std::optional<growth::GrowthParameters> growth, StepConfig step)
    : domain_(std::move(domain)),
      field_(std::move(field)),
      material_(std::move(material)),
      loads_(std::move(loads)),
      step_(step),
      assembler_(field_, domain_, loads_),
      adam_(field_.param_count()) {
  step_.validate();
  if (growth) growth_.emplace(*growth, domain_.points().size());
}

LossRecord Simulation::run_time_step(int i) {
  if (i != next_step_) throw DomainError("time steps must run in order");
  const auto start_clock = std::chrono::steady_clock::now();
  const int iters = i == 0 ? step_.iterations_first : step_.iterations;
  const bool growing = growth_.has_value() && i > 0;
  const double t_end = time_of(i);
  const double t_begin = growing ? time_of(i - 1) : t_end;
  const double sub_dt = growing ? step_.delta_t / iters : 0.0;

  // A warm start carries both the parameters and the Adam moments into the next step.
  if (i > 0 && !step_.warm_start) {
    field_.init_params(step_.seed);
    adam_.reset();
  }
  AdamConfig cfg{step_.learning_rate, step_.adam_beta1, step_.adam_beta2, step_.adam_eps};

  LossRecord rec;
  rec.step = i;
  rec.time = t_end;
  rec.energy.reserve(static_cast<std::size_t>(iters));
  std::span<double> params = field_.params();
  std::vector<double> good(params.begin(), params.end());
  double start = 0.0;
  double scale = 0.0;
  bool have_start = false;

  auto trigger = [&](const char* why, int k) {
    if (++rec.guard_triggers > 1) {
      std::ostringstream msg;
      msg << "step " << i << " aborted at iteration " << k << " (lr " << cfg.learning_rate << "): " << why;
      throw Error(msg.str());
    }
    std::copy(good.begin(), good.end(), params.begin());
    cfg.learning_rate *= 0.5;
    adam_.reset();
  };

  for (int k = 0; k < iters; ++k) {
    const double t = t_begin + sub_dt * k;
    const material::Moduli moduli = material_.relaxed_moduli(t);
    EnergyEvaluation ev;
    try {
      ev = assembler_.evaluate(params, moduli, growth(), growing);
    } catch (const InvertedElement& e) {
      trigger(e.what(), k);
      continue;
    } catch (const NonFiniteLoss& e) {
      std::ostringstream ctx;
      ctx << "step " << i << ", iteration " << k << ", lr " << cfg.learning_rate;
      throw NonFiniteLoss(e.value(), ctx.str());
    }
    const double pi = ev.terms.total();
    if (!have_start) {
      start = pi;
      if (reference_energy_ == 0.0) reference_energy_ = std::max(std::abs(start), std::abs(ev.terms.strain));
      scale = std::max({std::abs(start), std::abs(ev.terms.strain), reference_energy_, 1e-300});
      have_start = true;
    }
    // The growth landscape moves every iteration, so the ratio test only applies to fixed problems.
    if (!growing && pi - start > 10.0 * scale) {
      trigger("potential rose above 10x its step-start value", k);
      continue;
    }
    std::copy(params.begin(), params.end(), good.begin());
    rec.energy.push_back(pi);
    adam_step(params, ev.gradient, adam_, cfg);
    if (growing) {
      if (growth_->parameters().integrator == growth::GrowthIntegrator::Implicit) {
        for (std::size_t p = 0; p < growth_->size(); ++p)
          growth_->increment_implicit(p, ev.F[p], moduli.G, moduli.lambda, sub_dt);
      } else {
        growth_->increment(ev.sigma_00, ev.sigma_11, sub_dt);
      }
    }
  }

  const EnergyEvaluation fin = assembler_.evaluate(params, material_.relaxed_moduli(t_end), growth(), false);
  rec.converged = fin.terms.total();
  rec.terms = fin.terms;
  rec.final_learning_rate = cfg.learning_rate;
  for (const auto& p : domain_.points()) {
    const auto u = field_.evaluate(p.x, 0.0);
    rec.max_displacement = std::max(rec.max_displacement, std::hypot(u[0], u[1]));
  }
  rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_clock).count();
  ++next_step_;
  return rec;
}

Snapshot Simulation::snapshot(int i) const {
  Snapshot s;
  s.step = i;
  s.time = time_of(i);
  const material::Moduli m = material_.relaxed_moduli(s.time);
  const auto cs = domain_.coordinates();
  const std::span<const double> params = field_.params();
  const auto& pts = domain_.points();
  s.u.reserve(pts.size());
  s.sigma.reserve(pts.size());
  for (std::size_t p = 0; p < pts.size(); ++p) {
    const auto ud = field_.displacement(params, pts[p].x, 0.0);
    kinematics::GrowthTensor gt;
    const kinematics::GrowthTensor* gptr = nullptr;
    if (growth_) {
      gt = growth_->tensor(p);
      gptr = &gt;
    }
    const Mat3<double> F = point_deformation(ud, pts[p].x, cs, gptr);
    const Mat3<double> sig = material::cauchy_stress(F, m.G, m.lambda);
    s.u.push_back({ud[0].value, ud[1].value});
    s.sigma.push_back({sig[0][0], sig[1][1], sig[0][1], sig[2][2]});
  }
  if (growth_) {
    s.g_r.assign(growth_->g_r().begin(), growth_->g_r().end());
    s.g_theta.assign(growth_->g_theta().begin(), growth_->g_theta().end());
  }
  for (const auto& [name, set] : domain_.boundaries()) {
    SurfaceSample& ss = s.surfaces[name];
    for (const auto& bp : set) {
      ss.x.push_back(bp.x);
      ss.u.push_back(field_.evaluate(bp.x, 0.0));
    }
  }
  return s;
}

SimulationRecord Simulation::run(const std::function<void(const Snapshot&, const LossRecord&)>& observer) {
  SimulationRecord out;
  for (int i = next_step_; i <= step_.steps; ++i) {
    out.losses.push_back(run_time_step(i));
    out.snapshots.push_back(snapshot(i));
    const auto& last = out.losses.back();
    out.snapshots.back().energy = last.terms;
    if (observer) observer(out.snapshots.back(), last);
  }
  return out;
}

}  // namespace vdem::solver
