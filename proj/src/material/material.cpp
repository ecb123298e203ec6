#include "vdem/material/material.hpp"

#include <string>

namespace vdem::material {

MaterialModel::MaterialModel(double G_inf, double lambda_inf, std::vector<PronyBranch> branches, double nu)
    : G_inf_(G_inf), lambda_inf_(lambda_inf), branches_(std::move(branches)), nu_(nu) {
  if (!(nu < 0.5)) throw IncompressibleLimit(nu);
  if (!(nu > 0.0)) throw DomainError("Poisson ratio must be positive, got " + std::to_string(nu));
  if (!(G_inf > 0.0) || !(lambda_inf > 0.0)) throw DomainError("long-term moduli must be positive");
  for (const auto& b : branches_) {
    if (!(b.G > 0.0) || !(b.lambda > 0.0)) throw DomainError("Prony branch moduli must be positive");
    if (!(b.tau > 0.0)) throw DomainError("Prony branch relaxation time must be positive");
  }
}

MaterialModel MaterialModel::from_standard_solid(double E_inf, double E_1, double xi, double nu) {
  if (!(nu < 0.5)) throw IncompressibleLimit(nu);
  if (!(E_inf > 0.0) || !(E_1 > 0.0) || !(xi > 0.0)) throw DomainError("standard solid parameters must be positive");
  const Moduli inf = lame_from_young(E_inf, nu);
  const Moduli arm = lame_from_young(E_1, nu);
  return MaterialModel(inf.G, inf.lambda, {{arm.G, arm.lambda, xi / E_1}}, nu);
}

MaterialModel MaterialModel::elastic(double E, double nu) {
  if (!(nu < 0.5)) throw IncompressibleLimit(nu);
  if (!(E > 0.0)) throw DomainError("Young's modulus must be positive");
  const Moduli m = lame_from_young(E, nu);
  return MaterialModel(m.G, m.lambda, {}, nu);
}

Moduli MaterialModel::relaxed_moduli(double t) const {
  if (!(t >= 0.0)) throw DomainError("relaxed moduli requested at negative time " + std::to_string(t));
  Moduli m{G_inf_, lambda_inf_};
  for (const auto& b : branches_) {
    const double decay = std::exp(-t / b.tau);
    m.G += b.G * decay;
    m.lambda += b.lambda * decay;
  }
  return m;
}

double MaterialModel::m_inf() const { return G_inf_ / relaxed_moduli(0.0).G; }

std::vector<double> MaterialModel::m_branches() const {
  const double G0 = relaxed_moduli(0.0).G;
  std::vector<double> m;
  m.reserve(branches_.size());
  for (const auto& b : branches_) m.push_back(b.G / G0);
  return m;
}

Mat3<double> cauchy_stress(const Mat3<double>& F, double G, double lambda) {
  const double J = det3(F);
  if (!(J > 0.0)) throw InvertedElement(J, 0.0, 0.0);
  Mat3<double> s = left_cauchy_green(F);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) s[i][j] = G / J * (s[i][j] - (i == j ? 1.0 : 0.0));
    s[i][i] += lambda * (J - 1.0);
  }
  return s;
}

}  // namespace vdem::material
