#include "vdem/growth/growth.hpp"

#include <cmath>
#include <sstream>
#include <numeric>

#include "vdem/errors.hpp"
#include "vdem/material/material.hpp"

namespace vdem::growth {

GrowthState::GrowthState(GrowthParameters params, std::size_t points)
    : params_(params), g_r_(points, 1.0), g_theta_(points, 1.0) {}

std::array<double, 2> GrowthState::rate(std::size_t i, double sigma_r, double sigma_theta) const {
  if (params_.law == GrowthLaw::Isotropic) {
    const double r = params_.k * (sigma_r + sigma_theta + params_.b_r) * g_r_[i];
    return {r, r};
  }
  return {params_.k * (sigma_r + params_.b_r) * g_r_[i], params_.k * (sigma_theta + params_.b_theta) * g_theta_[i]};
}

void GrowthState::increment(std::size_t i, double sigma_r, double sigma_theta, double dt) {
  if (!(dt > 0.0)) throw DomainError("growth increment needs dt > 0");
  if (params_.law == GrowthLaw::Isotropic) {
    const double f = std::exp(params_.k * (sigma_r + sigma_theta + params_.b_r) * dt);
    g_r_[i] *= f;
    g_theta_[i] = g_r_[i];
    return;
  }
  g_r_[i] *= std::exp(params_.k * (sigma_r + params_.b_r) * dt);
  g_theta_[i] *= std::exp(params_.k * (sigma_theta + params_.b_theta) * dt);
}

void GrowthState::increment_implicit(std::size_t i, const Mat3<double>& F, double G, double lambda, double dt) {
  if (!(dt > 0.0)) throw DomainError("growth increment needs dt > 0");
  const bool iso = params_.law == GrowthLaw::Isotropic;
  const double y0[2] = {std::log(g_r_[i]), std::log(g_theta_[i])};
  const double kdt = params_.k * dt;
  // Residual of y - y0 - k dt (sigma(y) + b) in log ratios; isotropic uses y_r = y_t.
  auto residual = [&](const double y[2], double r[2]) {
    const auto Fa = kinematics::elastic_part(F, {{std::exp(y[0]), std::exp(y[1]), 1.0}});
    const auto s = material::cauchy_stress(Fa, G, lambda);
    if (iso) {
      r[0] = r[1] = y[0] - y0[0] - kdt * (s[0][0] + s[1][1] + params_.b_r);
    } else {
      r[0] = y[0] - y0[0] - kdt * (s[0][0] + params_.b_r);
      r[1] = y[1] - y0[1] - kdt * (s[1][1] + params_.b_theta);
    }
  };
  auto norm = [&](const double r[2]) { return iso ? std::abs(r[0]) : std::hypot(r[0], r[1]); };

  double y[2] = {y0[0], y0[1]}, r[2];
  residual(y, r);
  constexpr double h = 1e-7;
  for (int it = 0; it < 50 && norm(r) > 1e-14; ++it) {
    double step[2];
    if (iso) {
      double yp[2] = {y[0] + h, y[1] + h}, rp[2];
      residual(yp, rp);
      step[0] = step[1] = -r[0] / ((rp[0] - r[0]) / h);
    } else {
      double J[2][2];
      for (int c = 0; c < 2; ++c) {
        double yp[2] = {y[0], y[1]}, rp[2];
        yp[c] += h;
        residual(yp, rp);
        J[0][c] = (rp[0] - r[0]) / h;
        J[1][c] = (rp[1] - r[1]) / h;
      }
      const double det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
      step[0] = -(J[1][1] * r[0] - J[0][1] * r[1]) / det;
      step[1] = -(-J[1][0] * r[0] + J[0][0] * r[1]) / det;
    }
    // Backtrack so the residual norm decreases.
    double a = 1.0, yn[2], rn[2];
    for (int bt = 0; bt < 30; ++bt, a *= 0.5) {
      yn[0] = y[0] + a * step[0];
      yn[1] = y[1] + a * step[1];
      residual(yn, rn);
      if (std::isfinite(norm(rn)) && norm(rn) < norm(r)) break;
    }
    y[0] = yn[0];
    y[1] = yn[1];
    r[0] = rn[0];
    r[1] = rn[1];
  }
  if (!(norm(r) < 1e-8)) {
    std::ostringstream msg;
    msg << "implicit growth update did not converge at point " << i << " (residual " << norm(r) << ")";
    throw DomainError(msg.str());
  }
  g_r_[i] = std::exp(y[0]);
  g_theta_[i] = iso ? g_r_[i] : std::exp(y[1]);
}

void GrowthState::increment(std::span<const double> sigma_r, std::span<const double> sigma_theta, double dt) {
  if (sigma_r.size() != size() || sigma_theta.size() != size())
    throw DomainError("growth increment stress arrays do not match the point count");
  for (std::size_t i = 0; i < size(); ++i) increment(i, sigma_r[i], sigma_theta[i], dt);
}

double GrowthState::energy_density(std::size_t i) const {
  const double Jg = g_r_[i] * g_theta_[i];
  if (params_.law == GrowthLaw::Isotropic) return Jg * params_.b_r * g_r_[i];
  return Jg * (params_.b_r * g_r_[i] + params_.b_theta * g_theta_[i]);
}

double GrowthState::mean_g_r() const {
  return std::accumulate(g_r_.begin(), g_r_.end(), 0.0) / static_cast<double>(size());
}

double GrowthState::mean_g_theta() const {
  return std::accumulate(g_theta_.begin(), g_theta_.end(), 0.0) / static_cast<double>(size());
}

void GrowthState::set(std::size_t i, double g_r, double g_theta) {
  if (!(g_r > 0.0) || !(g_theta > 0.0)) throw DomainError("growth ratios must be positive");
  if (params_.law == GrowthLaw::Isotropic && g_r != g_theta)
    throw DomainError("isotropic growth keeps g_r == g_theta");
  g_r_[i] = g_r;
  g_theta_[i] = g_theta;
}

std::string to_string(GrowthIntegrator integrator) {
  return integrator == GrowthIntegrator::Implicit ? "implicit" : "explicit";
}

std::string to_string(GrowthLaw law) { return law == GrowthLaw::Isotropic ? "isotropic" : "differential"; }

}  // namespace vdem::growth
