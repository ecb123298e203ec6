#include "vdem/solver/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "vdem/errors.hpp"

namespace vdem::solver {

double band_mean_stress(const domain::Domain& d, const Snapshot& s, double lo, double hi) {
  double sum = 0.0;
  std::size_t n = 0;
  const auto& pts = d.points();
  for (std::size_t p = 0; p < pts.size(); ++p)
    if (pts[p].x[0] > lo && pts[p].x[0] < hi) {
      sum += s.sigma[p][0];
      ++n;
    }
  if (n == 0) throw DomainError("no collocation points in the stress band");
  return sum / static_cast<double>(n);
}

std::array<double, 2> tip_displacement(const field::NeuralField& f, double length, double height) {
  return f.evaluate({length, 0.5 * height}, 0.0);
}

std::array<double, 2> euler_mode_fit(const field::NeuralField& f, double length, double height, int n) {
  std::vector<double> phi(static_cast<std::size_t>(n)), u(static_cast<std::size_t>(n));
  double pp = 0.0, pu = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = length * i / (n - 1);
    const auto k = static_cast<std::size_t>(i);
    phi[k] = 1.0 - std::cos(std::numbers::pi * x / (2.0 * length));
    u[k] = f.evaluate({x, 0.5 * height}, 0.0)[1];
    pp += phi[k] * phi[k];
    pu += phi[k] * u[k];
  }
  const double A = pu / pp;
  double mean = 0.0;
  for (double v : u) mean += v;
  mean /= n;
  double ss_res = 0.0, ss_tot = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    ss_res += (u[k] - A * phi[k]) * (u[k] - A * phi[k]);
    ss_tot += (u[k] - mean) * (u[k] - mean);
  }
  return {A, ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 0.0};
}

std::vector<double> cosine_modes(std::span<const double> theta, std::span<const double> v, double span, int kmax) {
  if (theta.size() != v.size() || theta.empty()) throw DomainError("cosine_modes needs matching samples");
  std::vector<double> a(static_cast<std::size_t>(kmax + 1), 0.0);
  const double n = static_cast<double>(v.size());
  for (int k = 0; k <= kmax; ++k) {
    double s = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) s += v[j] * std::cos(k * std::numbers::pi * theta[j] / span);
    a[static_cast<std::size_t>(k)] = (k == 0 ? 1.0 : 2.0) * s / n;
  }
  return a;
}

double dominant_mode_amplitude(const std::vector<double>& a, int kmin) {
  double m = 0.0;
  for (std::size_t k = static_cast<std::size_t>(kmin); k < a.size(); ++k) m = std::max(m, std::abs(a[k]));
  return m;
}

double relative_spread(std::span<const double> v) {
  if (v.empty()) throw DomainError("relative_spread of an empty sample");
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  double var = 0.0;
  for (double x : v) var += (x - mean) * (x - mean);
  var /= static_cast<double>(v.size());
  return std::sqrt(var) / std::abs(mean);
}

double increase_fraction(std::span<const double> energy) {
  if (energy.size() < 2) return 0.0;
  std::size_t up = 0;
  for (std::size_t k = 1; k < energy.size(); ++k)
    if (energy[k] > energy[k - 1]) ++up;
  return static_cast<double>(up) / static_cast<double>(energy.size() - 1);
}

void surface_component(const Snapshot& s, const std::string& set, int component, std::vector<double>& theta,
                       std::vector<double>& value) {
  const auto it = s.surfaces.find(set);
  if (it == s.surfaces.end()) throw DomainError("snapshot has no boundary set '" + set + "'");
  theta.clear();
  value.clear();
  for (std::size_t i = 0; i < it->second.x.size(); ++i) {
    theta.push_back(it->second.x[i][1]);
    value.push_back(it->second.u[i][static_cast<std::size_t>(component)]);
  }
}

}  // namespace vdem::solver
