#ifndef VDEM_SOLVER_ADAM_HPP
#define VDEM_SOLVER_ADAM_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "vdem/errors.hpp"

namespace vdem::solver {

struct AdamConfig {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

struct AdamState {
  std::vector<double> m;
  std::vector<double> v;
  std::int64_t step = 0;

  explicit AdamState(std::size_t n = 0) : m(n, 0.0), v(n, 0.0) {}
  void reset() {
    std::fill(m.begin(), m.end(), 0.0);
    std::fill(v.begin(), v.end(), 0.0);
    step = 0;
  }
};

/// One bias-corrected Adam update of params in place.
inline void adam_step(std::span<double> params, std::span<const double> grad, AdamState& state,
                      const AdamConfig& cfg) {
  if (params.size() != grad.size() || state.m.size() != params.size())
    throw DomainError("adam_step: parameter, gradient and state sizes differ");
  ++state.step;
  const double c1 = 1.0 - std::pow(cfg.beta1, static_cast<double>(state.step));
  const double c2 = 1.0 - std::pow(cfg.beta2, static_cast<double>(state.step));
  for (std::size_t i = 0; i < params.size(); ++i) {
    state.m[i] = cfg.beta1 * state.m[i] + (1.0 - cfg.beta1) * grad[i];
    state.v[i] = cfg.beta2 * state.v[i] + (1.0 - cfg.beta2) * grad[i] * grad[i];
    const double mhat = state.m[i] / c1;
    const double vhat = state.v[i] / c2;
    params[i] -= cfg.learning_rate * mhat / (std::sqrt(vhat) + cfg.epsilon);
  }
}

}  // namespace vdem::solver

#endif  // VDEM_SOLVER_ADAM_HPP
