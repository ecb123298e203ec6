#ifndef VDEM_MATERIAL_MATERIAL_HPP
#define VDEM_MATERIAL_MATERIAL_HPP

#include <cmath>
#include <vector>

#include "vdem/autodiff/value.hpp"
#include "vdem/errors.hpp"
#include "vdem/tensor.hpp"

namespace vdem::material {

/// One Maxwell arm of a Prony series.
struct PronyBranch {
  double G;       // Pa
  double lambda;  // Pa
  double tau;     // s

  bool operator==(const PronyBranch&) const = default;
};

struct Moduli {
  double G;
  double lambda;
};

/**
 * Viscoelastic relaxation functions
 *
 *   G(t)      = G_inf      + sum_i G_i      exp(-t / tau_i)
 *   lambda(t) = lambda_inf + sum_i lambda_i exp(-t / tau_i)
 *
 * evaluated at the elapsed time and fed to the neo-Hookean kernels as
 * frozen moduli for one pseudo-elastic step.
 */
class MaterialModel {
 public:
  MaterialModel(double G_inf, double lambda_inf, std::vector<PronyBranch> branches, double nu);

  /// Three-parameter solid: spring E_inf parallel to a Maxwell arm (E_1, xi).
  static MaterialModel from_standard_solid(double E_inf, double E_1, double xi, double nu);

  /// Purely elastic (no relaxation branches).
  static MaterialModel elastic(double E, double nu);

  Moduli relaxed_moduli(double t) const;
  Moduli instantaneous() const { return relaxed_moduli(0.0); }
  Moduli long_term() const { return {G_inf_, lambda_inf_}; }

  /// E(t) = 2 (1 + nu) G(t).
  double youngs_modulus(double t) const { return 2.0 * (1.0 + nu_) * relaxed_moduli(t).G; }

  /// Dimensionless fractions m_inf and m_i of the shear relaxation function.
  double m_inf() const;
  std::vector<double> m_branches() const;

  double G_inf() const noexcept { return G_inf_; }
  double lambda_inf() const noexcept { return lambda_inf_; }
  double nu() const noexcept { return nu_; }
  const std::vector<PronyBranch>& branches() const noexcept { return branches_; }

 private:
  double G_inf_;
  double lambda_inf_;
  std::vector<PronyBranch> branches_;
  double nu_;
};

/// Shear modulus and first Lame parameter from (E, nu).
inline Moduli lame_from_young(double E, double nu) {
  return {E / (2.0 * (1.0 + nu)), nu * E / ((1.0 + nu) * (1.0 - 2.0 * nu))};
}

/**
 * Compressible neo-Hookean energy density
 *   w = G/2 (I1 - 3 - 2 ln J) + lambda/2 (J - 1)^2.
 * Throws InvertedElement (location zero; callers re-throw with coordinates)
 * when det F <= 0.
 */
template <typename T>
T strain_energy_density(const Mat3<T>& F, double G, double lambda) {
  using std::log;
  const T J = det3(F);
  const double Jv = ad::value_of(J);
  if (!(Jv > 0.0)) throw InvertedElement(Jv, 0.0, 0.0);
  const T I1 = first_invariant(F);
  const T Jm1 = J - 1.0;
  return (G * 0.5) * (I1 - 3.0 - 2.0 * log(J)) + (lambda * 0.5) * (Jm1 * Jm1);
}

/// Cauchy stress sigma = G/J (B - I) + lambda (J - 1) I.
Mat3<double> cauchy_stress(const Mat3<double>& F, double G, double lambda);

}  // namespace vdem::material

#endif  // VDEM_MATERIAL_MATERIAL_HPP
