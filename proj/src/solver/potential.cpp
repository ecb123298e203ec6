#include "vdem/solver/potential.hpp"

#include <cmath>

#include "vdem/errors.hpp"

namespace vdem::solver {

using ad::Dual;
using ad::Var;

PotentialAssembler::PotentialAssembler(const field::NeuralField& field, const domain::Domain& domain, Loads loads)
    : field_(&field), domain_(&domain), loads_(std::move(loads)) {
  const auto& pts = domain.points();
  coords_.resize(2, static_cast<Eigen::Index>(pts.size()));
  factors_.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    coords_(0, static_cast<Eigen::Index>(i)) = pts[i].x[0];
    coords_(1, static_cast<Eigen::Index>(i)) = pts[i].x[1];
    // Boundary constructions here are time-independent.
    factors_.push_back(field.boundary().factors(pts[i].x, 0.0));
  }
  for (const auto& tr : loads_.tractions)
    for (const auto& bp : domain.boundary(tr.boundary)) load_points_.push_back({bp.x, bp.weight, tr.value});
  load_coords_.resize(2, static_cast<Eigen::Index>(load_points_.size()));
  for (std::size_t i = 0; i < load_points_.size(); ++i) {
    const auto& lp = load_points_[i];
    load_coords_(0, static_cast<Eigen::Index>(i)) = lp.x[0];
    load_coords_(1, static_cast<Eigen::Index>(i)) = lp.x[1];
    load_factors_.push_back(field.boundary().factors(lp.x, 0.0));
    for (std::size_t c = 0; c < 2; ++c)
      external_constant_ -= lp.traction[c] * load_factors_.back().u_bar[c].value * lp.weight;
  }
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t c = 0; c < 2; ++c)
      external_constant_ -= loads_.body_force[c] * factors_[i].u_bar[c].value * pts[i].weight;
  for (const auto& net : field.networks()) {
    interior_.emplace_back(net);
    boundary_.emplace_back(net);
  }
}

void PotentialAssembler::run_networks(std::span<const double> params, const Eigen::Matrix2Xd& coords,
                                      std::vector<field::MlpBatch>& batches, Eigen::MatrixXd& out) {
  const Eigen::Index P = coords.cols();
  out.resize(2, 3 * P);
  if (field_->mode() == field::NetworkMode::Single) {
    batches[0].forward(params, coords);
    for (int b = 0; b < 3; ++b) out.middleCols(b * P, P) = batches[0].output(b);
    return;
  }
  const std::size_t n0 = field_->networks()[0].param_count();
  batches[0].forward(params.subspan(0, n0), coords);
  batches[1].forward(params.subspan(n0), coords);
  for (int b = 0; b < 3; ++b) {
    out.row(0).segment(b * P, P) = batches[0].output(b);
    out.row(1).segment(b * P, P) = batches[1].output(b);
  }
}

void PotentialAssembler::backprop(std::span<const double> params, std::vector<field::MlpBatch>& batches,
                                  const Eigen::MatrixXd& adj, std::span<double> grad) {
  if (field_->mode() == field::NetworkMode::Single) {
    batches[0].backward(params, adj, grad);
    return;
  }
  const std::size_t n0 = field_->networks()[0].param_count();
  batches[0].backward(params.subspan(0, n0), adj.row(0), grad.subspan(0, n0));
  batches[1].backward(params.subspan(n0), adj.row(1), grad.subspan(n0));
}

EnergyEvaluation PotentialAssembler::evaluate(std::span<const double> params, const material::Moduli& moduli,
                                              const growth::GrowthState* growth, bool want_stress) {
  const auto& pts = domain_->points();
  const auto P = static_cast<Eigen::Index>(pts.size());
  const auto cs = domain_->coordinates();
  if (growth != nullptr && growth->size() != pts.size())
    throw DomainError("growth state does not match the collocation set");

  EnergyEvaluation result;
  result.gradient.assign(params.size(), 0.0);
  result.terms.external = external_constant_;
  if (want_stress) {
    result.sigma_00.resize(pts.size());
    result.sigma_11.resize(pts.size());
    result.F.resize(pts.size());
  }

  run_networks(params, coords_, interior_, out_);
  adj_.setZero(2, 3 * P);

  ad::TapeScope scope(tape_);
  for (Eigen::Index i = 0; i < P; ++i) {
    const auto ip = static_cast<std::size_t>(i);
    const auto& pt = pts[ip];
    const auto& fac = factors_[ip];
    kinematics::GrowthTensor gt;
    const kinematics::GrowthTensor* gptr = nullptr;
    if (growth != nullptr) {
      gt = growth->tensor(ip);
      gptr = &gt;
    }

    tape_.clear();
    std::array<Dual<Var, 2>, 2> net;
    for (Eigen::Index c = 0; c < 2; ++c) {
      net[static_cast<std::size_t>(c)] =
          Dual<Var, 2>(Var::leaf(out_(c, i)), {Var::leaf(out_(c, P + i)), Var::leaf(out_(c, 2 * P + i))});
    }
    std::array<Dual<Var, 2>, 2> u;
    for (std::size_t c = 0; c < 2; ++c) u[c] = net[c] * ad::promote<Var>(fac.b[c]) + ad::promote<Var>(fac.u_bar[c]);
    const Var w = point_energy(u, pt.x, cs, moduli, gptr);
    if (!std::isfinite(w.v)) throw NonFiniteLoss(w.v, "strain energy at collocation point");
    result.terms.strain += w.v * pt.weight;
    tape_.backward(w.idx);
    for (std::size_t c = 0; c < 2; ++c) {
      const auto row = static_cast<Eigen::Index>(c);
      adj_(row, i) = tape_.adjoint(net[c].value.idx) * pt.weight;
      adj_(row, P + i) = tape_.adjoint(net[c].d[0].idx) * pt.weight;
      adj_(row, 2 * P + i) = tape_.adjoint(net[c].d[1].idx) * pt.weight;
      // Body force work on the network part of u.
      const double bf = loads_.body_force[c];
      if (bf != 0.0) {
        const double uc = out_(row, i) * fac.b[c].value + fac.u_bar[c].value;
        result.terms.external -= bf * (uc - fac.u_bar[c].value) * pt.weight;
        adj_(row, i) -= bf * fac.b[c].value * pt.weight;
      }
    }
    if (growth != nullptr) result.terms.growth += growth->energy_density(ip) * pt.weight;

    if (want_stress) {
      std::array<ad::Dual2, 2> ud;
      for (std::size_t c = 0; c < 2; ++c) {
        const auto row = static_cast<Eigen::Index>(c);
        const ad::Dual2 n(out_(row, i), {out_(row, P + i), out_(row, 2 * P + i)});
        ud[c] = n * fac.b[c] + fac.u_bar[c];
      }
      result.F[ip] = point_deformation(ud, pt.x, cs, nullptr);
      const Mat3<double> F = gptr ? kinematics::elastic_part(result.F[ip], *gptr) : result.F[ip];
      const Mat3<double> s = material::cauchy_stress(F, moduli.G, moduli.lambda);
      result.sigma_00[ip] = s[0][0];
      result.sigma_11[ip] = s[1][1];
    }
  }
  tape_.clear();
  backprop(params, interior_, adj_, result.gradient);

  if (!load_points_.empty()) {
    const auto Q = load_coords_.cols();
    run_networks(params, load_coords_, boundary_, load_out_);
    load_adj_.setZero(2, 3 * Q);
    for (Eigen::Index i = 0; i < Q; ++i) {
      const auto& lp = load_points_[static_cast<std::size_t>(i)];
      const auto& fac = load_factors_[static_cast<std::size_t>(i)];
      for (std::size_t c = 0; c < 2; ++c) {
        const auto row = static_cast<Eigen::Index>(c);
        const double b = fac.b[c].value;
        result.terms.external -= lp.traction[c] * load_out_(row, i) * b * lp.weight;
        load_adj_(row, i) = -lp.traction[c] * b * lp.weight;
      }
    }
    backprop(params, boundary_, load_adj_, result.gradient);
  }

  const double total = result.terms.total();
  if (!std::isfinite(total)) throw NonFiniteLoss(total, "assembled potential");
  return result;
}

Var assemble_potential(const field::NeuralField& field, std::span<const Var> params, const domain::Domain& domain,
                       const material::Moduli& moduli, const Loads& loads, const growth::GrowthState* growth,
                       double t) {
  const auto cs = domain.coordinates();
  Var total(0.0);
  const auto& pts = domain.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& pt = pts[i];
    const auto u = field.displacement(params, pt.x, t);
    kinematics::GrowthTensor gt;
    const kinematics::GrowthTensor* gptr = nullptr;
    if (growth != nullptr) {
      gt = growth->tensor(i);
      gptr = &gt;
    }
    total += point_energy(u, pt.x, cs, moduli, gptr) * pt.weight;
    for (std::size_t c = 0; c < 2; ++c)
      if (loads.body_force[c] != 0.0) total -= u[c].value * (loads.body_force[c] * pt.weight);
    if (growth != nullptr) total += growth->energy_density(i) * pt.weight;
  }
  for (const auto& tr : loads.tractions) {
    for (const auto& bp : domain.boundary(tr.boundary)) {
      const auto u = field.displacement(params, bp.x, t);
      for (std::size_t c = 0; c < 2; ++c)
        if (tr.value[c] != 0.0) total -= u[c].value * (tr.value[c] * bp.weight);
    }
  }
  return total;
}

std::pair<double, std::vector<double>> tape_energy_and_gradient(const field::NeuralField& field,
                                                                std::span<const double> params,
                                                                const domain::Domain& domain,
                                                                const material::Moduli& moduli, const Loads& loads,
                                                                const growth::GrowthState* growth) {
  ad::Tape tape;
  ad::TapeScope scope(tape);
  std::vector<Var> vars;
  vars.reserve(params.size());
  for (double p : params) vars.push_back(Var::leaf(p));
  const Var loss = assemble_potential(field, std::span<const Var>(vars), domain, moduli, loads, growth);
  auto grad = ad::param_gradient(loss, vars);
  return {loss.v, std::move(grad)};
}

}  // namespace vdem::solver
