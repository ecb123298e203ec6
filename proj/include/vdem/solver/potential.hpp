#ifndef VDEM_SOLVER_POTENTIAL_HPP
#define VDEM_SOLVER_POTENTIAL_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "vdem/autodiff/tape.hpp"
#include "vdem/domain/domain.hpp"
#include "vdem/field/neural_field.hpp"
#include "vdem/growth/growth.hpp"
#include "vdem/kinematics/kinematics.hpp"
#include "vdem/material/material.hpp"

namespace vdem::solver {

/// Dead traction on a named boundary set, in the domain's component frame (Pa).
struct Traction {
  std::string boundary;
  std::array<double, 2> value{0.0, 0.0};
};

struct Loads {
  std::vector<Traction> tractions;
  std::array<double, 2> body_force{0.0, 0.0};
};

/**
 * Deformation gradient at a point from the wrapped displacement duals;
 * the growth split is applied when a growth tensor is given.
 */
template <typename S>
Mat3<S> point_deformation(const std::array<ad::Dual<S, 2>, 2>& u, const domain::Point2& x,
                          kinematics::CoordinateSystem cs, const kinematics::GrowthTensor* growth) {
  Mat2<S> jac;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) jac[i][j] = u[i].d[j];
  Mat3<S> F = cs == kinematics::CoordinateSystem::Cartesian
                  ? kinematics::deformation_gradient_cartesian(jac)
                  : kinematics::deformation_gradient_cylindrical(u[0].value, u[1].value, jac, x[0]);
  if (growth != nullptr) F = kinematics::elastic_part(F, *growth);
  return F;
}

/// Strain energy density at a point; InvertedElement carries the point location.
template <typename S>
S point_energy(const std::array<ad::Dual<S, 2>, 2>& u, const domain::Point2& x, kinematics::CoordinateSystem cs,
               const material::Moduli& m, const kinematics::GrowthTensor* growth) {
  const Mat3<S> F = point_deformation(u, x, cs, growth);
  try {
    return material::strain_energy_density(F, m.G, m.lambda);
  } catch (const InvertedElement& e) {
    throw InvertedElement(e.det(), x[0], x[1]);
  }
}

/// Breakdown of an assembled potential.
struct EnergyTerms {
  double strain = 0.0;
  double growth = 0.0;    // sum J_g b_i g_i dV (no displacement dependence)
  double external = 0.0;  // minus the work of body forces and tractions
  double total() const { return strain + growth + external; }
};

struct EnergyEvaluation {
  EnergyTerms terms;
  std::vector<double> gradient;
  // In-plane stresses per collocation point (component frame), filled on request.
  std::vector<double> sigma_00, sigma_11;
  // Total deformation gradient per point (growth not removed), filled on request.
  std::vector<Mat3<double>> F;
};

/**
 * Potential-energy assembler used by the optimizer.
 *
 *   Pi = sum_p w(F_p; G, lambda) dV_p + sum_p J_g b.g dV_p
 *        - sum_p f.u dV_p - sum_s t.u dS_s
 *
 * The network part uses the batched forward/backward kernel; the per-point
 * constitutive part is differentiated on a small reverse tape.
 */
class PotentialAssembler {
 public:
  PotentialAssembler(const field::NeuralField& field, const domain::Domain& domain, Loads loads);

  EnergyEvaluation evaluate(std::span<const double> params, const material::Moduli& moduli,
                            const growth::GrowthState* growth, bool want_stress = false);

  double external_work_constant() const noexcept { return external_constant_; }

 private:
  struct LoadPoint {
    domain::Point2 x;
    double weight;
    std::array<double, 2> traction;
  };

  void run_networks(std::span<const double> params, const Eigen::Matrix2Xd& coords,
                    std::vector<field::MlpBatch>& batches, Eigen::MatrixXd& out);
  void backprop(std::span<const double> params, std::vector<field::MlpBatch>& batches, const Eigen::MatrixXd& adj,
                std::span<double> grad);

  const field::NeuralField* field_;
  const domain::Domain* domain_;
  Loads loads_;
  Eigen::Matrix2Xd coords_;
  Eigen::Matrix2Xd load_coords_;
  std::vector<field::BoundaryConstruction::Factors> factors_;
  std::vector<field::BoundaryConstruction::Factors> load_factors_;
  std::vector<LoadPoint> load_points_;
  double external_constant_ = 0.0;
  std::vector<field::MlpBatch> interior_, boundary_;
  Eigen::MatrixXd out_, load_out_, adj_, load_adj_;
  ad::Tape tape_;
};

/**
 * Same potential recorded entirely on the active tape (network included),
 * with `params` as tape variables. Reference route for gradient checks.
 */
ad::Var assemble_potential(const field::NeuralField& field, std::span<const ad::Var> params,
                           const domain::Domain& domain, const material::Moduli& moduli, const Loads& loads,
                           const growth::GrowthState* growth, double t = 0.0);

/// Convenience: value and gradient through the all-tape route.
std::pair<double, std::vector<double>> tape_energy_and_gradient(const field::NeuralField& field,
                                                                std::span<const double> params,
                                                                const domain::Domain& domain,
                                                                const material::Moduli& moduli, const Loads& loads,
                                                                const growth::GrowthState* growth);

}  // namespace vdem::solver

#endif  // VDEM_SOLVER_POTENTIAL_HPP
