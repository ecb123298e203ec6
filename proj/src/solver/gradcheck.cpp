#include "vdem/solver/gradcheck.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace vdem::solver {

GradCheckResult gradient_check(const field::NeuralField& f, const domain::Domain& d, const material::Moduli& m,
                               const Loads& loads, std::uint64_t seed, std::size_t count, double h, double hx) {
  GradCheckResult res;
  PotentialAssembler as(f, d, loads);
  std::vector<double> p(f.params().begin(), f.params().end());
  const EnergyEvaluation base = as.evaluate(p, m, nullptr);
  double gmax = 0.0;
  for (double g : base.gradient) gmax = std::max(gmax, std::abs(g));
  const double floor = 1e-8 * gmax;

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> idx(p.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  for (std::size_t i = 0; i < std::min(count, idx.size()); ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (idx.size() - i));
    std::swap(idx[i], idx[j]);
    const std::size_t k = idx[i];
    const double keep = p[k];
    p[k] = keep + h;
    const double ep = as.evaluate(p, m, nullptr).terms.total();
    p[k] = keep - h;
    const double em = as.evaluate(p, m, nullptr).terms.total();
    p[k] = keep;
    const double fd = (ep - em) / (2.0 * h);
    const double denom = std::max({std::abs(fd), std::abs(base.gradient[k]), floor});
    res.max_relative_error = std::max(res.max_relative_error, std::abs(fd - base.gradient[k]) / denom);
    ++res.parameters_checked;
  }

  const auto& pts = d.points();
  const std::span<const double> params = f.params();
  for (std::size_t i = 0; i < std::min(count, pts.size()); ++i) {
    const auto& x = pts[static_cast<std::size_t>(rng() % pts.size())].x;
    const Mat2<double> J = field::spatial_jacobian(f, params, x);
    for (std::size_t j = 0; j < 2; ++j) {
      auto xp = x, xm = x;
      xp[j] += hx;
      xm[j] -= hx;
      const auto up = f.evaluate(xp, 0.0), um = f.evaluate(xm, 0.0);
      for (std::size_t c = 0; c < 2; ++c)
        res.max_jacobian_error = std::max(res.max_jacobian_error, std::abs((up[c] - um[c]) / (2.0 * hx) - J[c][j]));
    }
    ++res.points_checked;
  }
  return res;
}

}  // namespace vdem::solver
