#include <doctest.h>

#include <cmath>

#include "vdem/autodiff/dual.hpp"
#include "vdem/errors.hpp"
#include "vdem/kinematics/kinematics.hpp"
#include "vdem/material/material.hpp"

using namespace vdem;
using ad::Dual2;
namespace kin = vdem::kinematics;

namespace {

// Smooth Cartesian test field.
template <typename T>
std::array<T, 2> field(const T& x, const T& y) {
  using std::exp;
  using std::sin;
  return {0.05 * x * y + 0.02 * sin(y), -0.03 * x * x + 0.01 * exp(0.5 * y)};
}

Mat3<double> cartesian_F(double x, double y) {
  const auto [dx, dy] = ad::lift_spatial(x, y);
  const auto u = field(dx, dy);
  Mat2<double> J{{{u[0].d[0], u[0].d[1]}, {u[1].d[0], u[1].d[1]}}};
  return kin::deformation_gradient_cartesian(J);
}

}  // namespace

TEST_CASE("plane strain Cartesian deformation gradient") {
  const Mat2<double> J{{{0.1, 0.0}, {0.0, -0.05}}};
  const auto F = kin::deformation_gradient_cartesian(J);
  CHECK(F[0][0] == doctest::Approx(1.1));
  CHECK(F[1][1] == doctest::Approx(0.95));
  CHECK(F[2][2] == 1.0);
  CHECK(F[0][1] == 0.0);
  CHECK(F[0][2] == 0.0);
}

TEST_CASE("uniform inflation in polar components") {
  // u_r = 0.1 r gives F = diag(1.1, 1.1, 1).
  const double r = 0.95;
  const Mat2<double> partials{{{0.1, 0.0}, {0.0, 0.0}}};
  const auto F = kin::deformation_gradient_cylindrical(0.1 * r, 0.0, partials, r);
  CHECK(F[0][0] == doctest::Approx(1.1));
  CHECK(F[1][1] == doctest::Approx(1.1));
  CHECK(F[0][1] == 0.0);
  CHECK(F[1][0] == 0.0);
  CHECK_THROWS_AS(kin::deformation_gradient_cylindrical(0.0, 0.0, partials, 0.0), DomainError);
}

TEST_CASE("polar deformation gradient is the rotated Cartesian one") {
  for (const auto& [r, th] : {std::pair{0.9, 0.3}, {1.2, 1.1}, {2.0, 2.7}}) {
    // Polar components and their (r, theta) partials through the same Cartesian field.
    const auto [dr, dth] = ad::lift_spatial(r, th);
    const Dual2 c = ad::cos(dth), s = ad::sin(dth);
    const auto u = field(dr * c, dr * s);
    const Dual2 ur = c * u[0] + s * u[1];
    const Dual2 ut = c * u[1] - s * u[0];
    const Mat2<double> partials{{{ur.d[0], ur.d[1]}, {ut.d[0], ut.d[1]}}};
    const auto Fp = kin::deformation_gradient_cylindrical(ur.value, ut.value, partials, r);

    const auto R = kin::polar_frame(th);
    const auto Fc = cartesian_F(r * std::cos(th), r * std::sin(th));
    const auto expect = mul3(transpose3(R), mul3(Fc, R));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(Fp[i][j] == doctest::Approx(expect[i][j]).epsilon(1e-12));
  }
}

TEST_CASE("linearized rigid rotation energy is fourth order") {
  // u = omega (-y, x) gives det F = 1 + omega^2 and I1 = 3 + 2 omega^2, so the
  // first-order terms cancel and the energy scales as omega^4.
  auto energy = [](double omega) {
    const Mat2<double> J{{{0.0, -omega}, {omega, 0.0}}};
    return material::strain_energy_density(kin::deformation_gradient_cartesian(J), 1.0, 2.0);
  };
  const double ratio = energy(1e-2) / energy(1e-3);
  CHECK(ratio == doctest::Approx(1e4).epsilon(1e-3));
}

TEST_CASE("growth split") {
  auto F = identity3<double>();
  F[0][0] = 1.2;
  F[1][1] = 1.2;
  const auto Fa = kin::elastic_part(F, {{1.2, 1.2, 1.0}});
  for (int i = 0; i < 3; ++i) CHECK(Fa[i][i] == doctest::Approx(1.0));

  const auto Fb = kin::elastic_part(F, {{1.1, 1.0, 1.0}});
  CHECK(Fb[0][0] == doctest::Approx(1.2 / 1.1));
  CHECK(Fb[1][1] == doctest::Approx(1.2));

  const auto G = cartesian_F(0.4, 0.7);
  const kin::GrowthTensor g{{1.3, 0.8, 1.0}};
  CHECK(det3(kin::elastic_part(G, g)) * g.det() == doctest::Approx(det3(G)));
  CHECK_THROWS_AS(kin::elastic_part(G, {{0.0, 1.0, 1.0}}), DomainError);
}
