#ifndef VDEM_SOLVER_GRADCHECK_HPP
#define VDEM_SOLVER_GRADCHECK_HPP

#include <cstdint>

#include "vdem/domain/domain.hpp"
#include "vdem/field/neural_field.hpp"
#include "vdem/material/material.hpp"
#include "vdem/solver/potential.hpp"

namespace vdem::solver {

struct GradCheckResult {
  double max_relative_error = 0.0;  // parameter gradient vs central differences
  double max_jacobian_error = 0.0;  // spatial Jacobian vs central differences, absolute
  std::size_t parameters_checked = 0;
  std::size_t points_checked = 0;
};

/**
 * Compares the assembled gradient with central differences on `count`
 * parameters drawn with `seed`, and the spatial Jacobian of the field at
 * `count` collocation points. Relative errors use max(|a|, |b|) with a floor
 * of 1e-8 times the largest gradient entry.
 */
GradCheckResult gradient_check(const field::NeuralField& f, const domain::Domain& d, const material::Moduli& m,
                               const Loads& loads, std::uint64_t seed, std::size_t count = 20, double h = 1e-6,
                               double hx = 1e-5);

}  // namespace vdem::solver

#endif  // VDEM_SOLVER_GRADCHECK_HPP
