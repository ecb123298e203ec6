#ifndef VDEM_ORACLES_ORACLES_HPP
#define VDEM_ORACLES_ORACLES_HPP

#include <optional>
#include <string>
#include <vector>

namespace vdem::oracles {

/// Tabulated closed-form quantity.
struct OracleResult {
  std::string quantity;
  std::string source;
  std::vector<double> times;
  std::vector<double> values;
};

/// Stress under held strain eps0 for the three-parameter solid: [E_inf + E_1 exp(-t/tau)] eps0.
double relaxation_stress(double E_inf, double E_1, double tau, double eps0, double t);
double relaxation_stress_rate(double E_inf, double E_1, double tau, double eps0, double t);

/// Retardation time tau (E_inf + E_1) / E_inf.
double retardation_time(double E_inf, double E_1, double tau);

/// Strain under held stress sigma0: sigma0 [1/E_inf - E_1/(E_inf (E_inf + E_1)) exp(-t/tau_r)].
double creep_strain(double E_inf, double E_1, double tau, double sigma0, double t);
double creep_strain_rate(double E_inf, double E_1, double tau, double sigma0, double t);

/// Cantilever Euler pressure pi^2 E I / (4 A L^2) for a unit-depth section (I = h^3/12, A = h).
double euler_buckling_pressure(double E, double length, double height);

/// Thin-walled cylinder estimate 2E/(1 - nu^2) (a/d)^3.
double shell_buckling_pressure(double E, double nu, double thickness, double diameter);

/**
 * Quasi-static creep-buckling time: root of p = p_cr(E(t)) for the cantilever,
 * found by bisection. Empty when the load never crosses the threshold
 * (p <= p_cr(E_inf)) or already exceeds it at t = 0.
 */
std::optional<double> creep_buckling_time(double E_inf, double E_1, double tau, double length, double height,
                                          double pressure);

OracleResult tabulate_relaxation(double E_inf, double E_1, double tau, double eps0, const std::vector<double>& t);
OracleResult tabulate_creep(double E_inf, double E_1, double tau, double sigma0, const std::vector<double>& t);

// Finite-element eigen-pressures of the cantilever and ring, used as fixed references (Pa).
inline constexpr double kBeamEigenLongTerm = 9.36e-3;
inline constexpr double kBeamEigenInstantaneous = 2.34e-2;
inline constexpr double kShellEigenLongTerm = 6.44e-3;
inline constexpr double kShellEigenInstantaneous = 1.61e-2;

}  // namespace vdem::oracles

#endif  // VDEM_ORACLES_ORACLES_HPP
