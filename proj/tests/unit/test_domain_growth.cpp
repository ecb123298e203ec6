#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "vdem/domain/domain.hpp"
#include "vdem/errors.hpp"
#include "vdem/growth/growth.hpp"
#include "vdem/material/material.hpp"

using namespace vdem;
using growth::GrowthLaw;
using growth::GrowthState;

TEST_CASE("beam sampling") {
  const auto d = domain::sample_beam(10.0, 1.0, 100, 10);
  CHECK(d.points().size() == 1000);
  CHECK(d.total_weight() == doctest::Approx(10.0));
  CHECK(d.boundary_weight("right_end") == doctest::Approx(1.0));
  CHECK(d.boundary("right_end").front().normal == domain::Point2{1.0, 0.0});
  CHECK(d.boundary("right_end").front().x[0] == 10.0);
  CHECK(d.coordinates() == kinematics::CoordinateSystem::Cartesian);
  CHECK_THROWS_AS(domain::sample_beam(10.0, 1.0, 1, 10), DomainError);
  CHECK_THROWS_AS(d.boundary("top"), DomainError);
}

TEST_CASE("annulus sampling") {
  constexpr double pi = std::numbers::pi;
  const auto q = domain::sample_annulus(0.9, 1.0, pi / 2.0, 20, 90);
  CHECK(q.total_weight() == doctest::Approx(0.14923).epsilon(1e-4));
  CHECK(q.boundary_weight("outer_surface") == doctest::Approx(pi / 2.0));
  CHECK(q.boundary_weight("edge_start") == doctest::Approx(0.1));
  const auto h = domain::sample_annulus(0.9, 1.0, pi, 10, 180);
  CHECK(h.total_weight() == doctest::Approx(0.29845).epsilon(1e-4));
  CHECK(h.coordinates() == kinematics::CoordinateSystem::Cylindrical);
  CHECK_THROWS_AS(domain::sample_annulus(0.0, 1.0, pi, 10, 10), DomainError);
  CHECK_THROWS_AS(domain::sample_annulus(1.0, 0.9, pi, 10, 10), DomainError);
}

TEST_CASE("midpoint quadrature converges at second order") {
  auto error = [](int n) {
    const auto d = domain::sample_beam(10.0, 1.0, n, n);
    double s = 0.0;
    for (const auto& p : d.points()) s += (p.x[0] * p.x[0] + p.x[1] * p.x[1]) * p.weight;
    return std::abs(s - (1000.0 / 3.0 + 10.0 / 3.0));
  };
  const double e10 = error(10), e20 = error(20), e40 = error(40);
  CHECK(e10 / e20 == doctest::Approx(4.0).epsilon(0.05));
  CHECK(e20 / e40 == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("point cloud csv") {
  std::ostringstream os;
  domain::sample_beam(1.0, 1.0, 2, 2).write_csv(os);
  const std::string s = os.str();
  CHECK(s.rfind("set,c0,c1,weight\ninterior,0.25,0.25,0.25\n", 0) == 0);
  CHECK(s.find("right_end,1,0.25,0.5") != std::string::npos);
}

TEST_CASE("exponential growth update") {
  GrowthState g({GrowthLaw::Isotropic, 0.5, 10.0, 0.0}, 1);
  g.increment(0, 0.0, 0.0, 2.5e-3);
  CHECK(g.g_r(0) == doctest::Approx(1.012578).epsilon(1e-6));
  CHECK(g.g_theta(0) == g.g_r(0));
}

TEST_CASE("growth stops at the homeostatic stress") {
  GrowthState iso({GrowthLaw::Isotropic, 0.5, 10.0, 0.0}, 1);
  iso.increment(0, -4.0, -6.0, 1.0);
  CHECK(iso.g_r(0) == 1.0);

  GrowthState diff({GrowthLaw::Differential, 0.5, 10.0, 10.0}, 1);
  diff.increment(0, -10.0, 0.0, 0.1);
  CHECK(diff.g_r(0) == 1.0);
  CHECK(diff.g_theta(0) > 1.0);
}

TEST_CASE("growth ratios stay positive and match the rate law") {
  GrowthState g({GrowthLaw::Differential, 0.1, 1.0, 3.0}, 1);
  for (int i = 0; i < 100; ++i) g.increment(0, -5.0, -8.0, 0.5);
  CHECK(g.g_r(0) < 1.0);
  CHECK(g.g_r(0) > 0.0);
  CHECK(g.g_theta(0) > 0.0);

  GrowthState h({GrowthLaw::Differential, 0.3, 1.0, 2.0}, 1);
  const auto rate = h.rate(0, 0.5, -0.5);
  h.increment(0, 0.5, -0.5, 1e-6);
  CHECK((h.g_r(0) - 1.0) / 1e-6 == doctest::Approx(rate[0]).epsilon(1e-5));
  CHECK((h.g_theta(0) - 1.0) / 1e-6 == doctest::Approx(rate[1]).epsilon(1e-5));
  CHECK_THROWS_AS(h.increment(0, 0.0, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(h.set(0, -1.0, 1.0), DomainError);
}

TEST_CASE("isotropic growth stays isotropic") {
  GrowthState g({GrowthLaw::Isotropic, 0.1, 5.0, 0.0}, 3);
  const std::vector<double> sr{-1.0, 0.0, 2.0}, st{-3.0, 1.0, 0.5};
  for (int i = 0; i < 10; ++i) g.increment(sr, st, 0.1);
  for (std::size_t i = 0; i < 3; ++i) CHECK(g.g_r(i) == g.g_theta(i));
  CHECK(g.g_r(2) > g.g_r(0));
}

TEST_CASE("implicit growth update") {
  // Nearly incompressible material at fixed deformation: the explicit update
  // overshoots here, the implicit one settles where sigma_r + sigma_t = -b.
  const double E = 100.0, nu = 0.49;
  const double G = E / (2.0 * (1.0 + nu)), lambda = E * nu / ((1.0 + nu) * (1.0 - 2.0 * nu));
  const auto F = identity3<double>();
  const double dt = 1.0 / 400.0;
  auto stress_sum = [&](const GrowthState& g) {
    const auto s = material::cauchy_stress(kinematics::elastic_part(F, g.tensor(0)), G, lambda);
    return s[0][0] + s[1][1];
  };

  GrowthState ex({GrowthLaw::Isotropic, 0.5, 10.0, 0.0, growth::GrowthIntegrator::Explicit}, 1);
  ex.increment(0, 0.0, 0.0, dt);
  ex.increment(0, stress_sum(ex) / 2.0, stress_sum(ex) / 2.0, dt);
  CHECK(ex.g_r(0) < 1.0);  // overshoot below the starting ratio

  GrowthState im({GrowthLaw::Isotropic, 0.5, 10.0, 0.0}, 1);
  double prev = 1.0;
  for (int k = 0; k < 20; ++k) {
    const double before = im.g_r(0);
    im.increment_implicit(0, F, G, lambda, dt);
    CHECK(im.g_r(0) >= prev);
    // The update satisfies its own defining equation.
    CHECK(std::log(im.g_r(0) / before) == doctest::Approx(0.5 * (stress_sum(im) + 10.0) * dt).epsilon(1e-9));
    prev = im.g_r(0);
  }
  CHECK(stress_sum(im) == doctest::Approx(-10.0).epsilon(1e-3));

  // With a soft material and a short step both integrators agree to first order.
  GrowthState a({GrowthLaw::Differential, 0.1, 1.0, 2.0}, 1), b = a;
  a.increment_implicit(0, F, 1.0, 1.0, 1e-4);
  b.increment(0, 0.0, 0.0, 1e-4);
  CHECK(a.g_r(0) == doctest::Approx(b.g_r(0)).epsilon(1e-8));
  CHECK(a.g_theta(0) == doctest::Approx(b.g_theta(0)).epsilon(1e-8));
  CHECK_THROWS_AS(a.increment_implicit(0, F, 1.0, 1.0, 0.0), DomainError);
}
