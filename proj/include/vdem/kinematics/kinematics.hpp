#ifndef VDEM_KINEMATICS_KINEMATICS_HPP
#define VDEM_KINEMATICS_KINEMATICS_HPP

#include <array>
#include <cmath>
#include <string>

#include "vdem/errors.hpp"
#include "vdem/tensor.hpp"

namespace vdem::kinematics {

enum class CoordinateSystem { Cartesian, Cylindrical };

/// Diagonal growth tensor F_g = diag(g_1, g_2, g_3); plane strain keeps g_3 = 1.
struct GrowthTensor {
  std::array<double, 3> g{1.0, 1.0, 1.0};
  double det() const noexcept { return g[0] * g[1] * g[2]; }
};

struct DeformationState {
  Mat3<double> F = identity3<double>();
  Mat3<double> F_a = identity3<double>();
  GrowthTensor F_g;
  CoordinateSystem coordinates = CoordinateSystem::Cartesian;
};

/// F = I + grad u in plane strain (F_zz = 1).
template <typename T>
Mat3<T> deformation_gradient_cartesian(const Mat2<T>& jac) {
  Mat3<T> F = identity3<T>();
  F[0][0] = 1.0 + jac[0][0];
  F[0][1] = jac[0][1];
  F[1][0] = jac[1][0];
  F[1][1] = 1.0 + jac[1][1];
  return F;
}

/**
 * Deformation gradient in the physical orthonormal polar frame (e_r, e_theta, e_z)
 * from polar displacement components and their partials
 * partials[i][j] = d u_i / d (r, theta)_j.
 */
template <typename T>
Mat3<T> deformation_gradient_cylindrical(const T& u_r, const T& u_theta, const Mat2<T>& partials, double r) {
  if (!(r > 0.0)) throw DomainError("cylindrical kinematics require r > 0, got r = " + std::to_string(r));
  const double inv_r = 1.0 / r;
  Mat3<T> F = identity3<T>();
  F[0][0] = 1.0 + partials[0][0];
  F[0][1] = (partials[0][1] - u_theta) * inv_r;
  F[1][0] = partials[1][0];
  F[1][1] = 1.0 + (partials[1][1] + u_r) * inv_r;
  return F;
}

/// F_a = F F_g^{-1}.
template <typename T>
Mat3<T> elastic_part(const Mat3<T>& F, const GrowthTensor& Fg) {
  for (double gi : Fg.g)
    if (!(gi > 0.0)) throw DomainError("growth ratios must be positive, got " + std::to_string(gi));
  Mat3<T> Fa;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) Fa[i][j] = F[i][j] * (1.0 / Fg.g[static_cast<std::size_t>(j)]);
  return Fa;
}

/// Rotation taking polar-frame components to Cartesian components at angle theta.
inline Mat3<double> polar_frame(double theta) {
  Mat3<double> R = identity3<double>();
  R[0][0] = std::cos(theta);
  R[0][1] = -std::sin(theta);
  R[1][0] = std::sin(theta);
  R[1][1] = std::cos(theta);
  return R;
}

}  // namespace vdem::kinematics

#endif  // VDEM_KINEMATICS_KINEMATICS_HPP
