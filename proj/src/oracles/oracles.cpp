#include "vdem/oracles/oracles.hpp"

#include <cmath>
#include <numbers>

#include "vdem/errors.hpp"

namespace vdem::oracles {

namespace {
void require_time(double t) {
  if (!(t >= 0.0)) throw DomainError("oracle evaluated at negative time");
}
}  // namespace

double relaxation_stress(double E_inf, double E_1, double tau, double eps0, double t) {
  require_time(t);
  return (E_inf + E_1 * std::exp(-t / tau)) * eps0;
}

double relaxation_stress_rate(double /*E_inf*/, double E_1, double tau, double eps0, double t) {
  require_time(t);
  return -E_1 * eps0 / tau * std::exp(-t / tau);
}

double retardation_time(double E_inf, double E_1, double tau) { return tau * (E_inf + E_1) / E_inf; }

double creep_strain(double E_inf, double E_1, double tau, double sigma0, double t) {
  require_time(t);
  const double tr = retardation_time(E_inf, E_1, tau);
  return sigma0 * (1.0 / E_inf - E_1 / (E_inf * (E_inf + E_1)) * std::exp(-t / tr));
}

double creep_strain_rate(double E_inf, double E_1, double tau, double sigma0, double t) {
  require_time(t);
  const double tr = retardation_time(E_inf, E_1, tau);
  return sigma0 * E_1 / (tr * E_inf * (E_inf + E_1)) * std::exp(-t / tr);
}

double euler_buckling_pressure(double E, double length, double height) {
  if (!(E > 0.0) || !(length > 0.0) || !(height > 0.0)) throw DomainError("buckling inputs must be positive");
  const double I = height * height * height / 12.0;
  const double A = height;
  return std::numbers::pi * std::numbers::pi * E * I / (4.0 * A * length * length);
}

double shell_buckling_pressure(double E, double nu, double thickness, double diameter) {
  if (!(E > 0.0) || !(thickness > 0.0) || !(diameter > 0.0)) throw DomainError("buckling inputs must be positive");
  if (!(nu < 1.0)) throw DomainError("shell buckling estimate needs nu < 1");
  const double ratio = thickness / diameter;
  return 2.0 * E / (1.0 - nu * nu) * ratio * ratio * ratio;
}

std::optional<double> creep_buckling_time(double E_inf, double E_1, double tau, double length, double height,
                                          double pressure) {
  auto excess = [&](double t) {
    return pressure - euler_buckling_pressure(E_inf + E_1 * std::exp(-t / tau), length, height);
  };
  if (excess(0.0) >= 0.0) return std::nullopt;
  if (pressure <= euler_buckling_pressure(E_inf, length, height)) return std::nullopt;
  double lo = 0.0;
  double hi = tau;
  while (excess(hi) < 0.0) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

OracleResult tabulate_relaxation(double E_inf, double E_1, double tau, double eps0, const std::vector<double>& t) {
  OracleResult r{"relaxation_stress", "sigma(t) = E(t) eps0", t, {}};
  for (double ti : t) r.values.push_back(relaxation_stress(E_inf, E_1, tau, eps0, ti));
  return r;
}

OracleResult tabulate_creep(double E_inf, double E_1, double tau, double sigma0, const std::vector<double>& t) {
  OracleResult r{"creep_strain", "standard solid creep", t, {}};
  for (double ti : t) r.values.push_back(creep_strain(E_inf, E_1, tau, sigma0, ti));
  return r;
}

}  // namespace vdem::oracles
