#ifndef VDEM_FIELD_MLP_HPP
#define VDEM_FIELD_MLP_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "vdem/autodiff/dual.hpp"
#include "vdem/autodiff/tape.hpp"

namespace vdem::field {

/// Fixed affine map from physical coordinates to network inputs.
struct InputScaling {
  std::array<double, 2> center{0.0, 0.0};
  std::array<double, 2> half_width{1.0, 1.0};

  /// Maps the box [lo0, hi0] x [lo1, hi1] onto [-1, 1]^2.
  static InputScaling from_bounds(const std::array<double, 4>& b) {
    return {{0.5 * (b[0] + b[1]), 0.5 * (b[2] + b[3])}, {0.5 * (b[1] - b[0]), 0.5 * (b[3] - b[2])}};
  }
};

/**
 * Fully connected tanh network with a linear read-out.
 *
 * Parameters live in one flat vector; for every layer the weight matrix is
 * stored row-major (out x in) followed by the bias vector.
 */
class Mlp {
 public:
  explicit Mlp(std::vector<int> layer_sizes, InputScaling scaling = {}, double output_scale = 1.0);

  const std::vector<int>& layer_sizes() const noexcept { return sizes_; }
  std::size_t param_count() const noexcept { return count_; }
  std::size_t inputs() const noexcept { return static_cast<std::size_t>(sizes_.front()); }
  std::size_t outputs() const noexcept { return static_cast<std::size_t>(sizes_.back()); }
  const InputScaling& scaling() const noexcept { return scaling_; }
  double output_scale() const noexcept { return output_scale_; }

  std::size_t weight_offset(std::size_t layer) const { return offsets_[layer]; }
  std::size_t bias_offset(std::size_t layer) const {
    return offsets_[layer] + static_cast<std::size_t>(sizes_[layer] * sizes_[layer + 1]);
  }

  /// Glorot-uniform weights, zero biases, from a seeded 64-bit generator.
  std::vector<double> init_params(std::uint64_t seed) const;

  /**
   * Network outputs together with their derivatives with respect to the two
   * physical input coordinates. S is the parameter scalar (double or a tape
   * variable); the tangents inherit S, which makes them differentiable.
   */
  template <typename S>
  std::vector<ad::Dual<S, 2>> forward(std::span<const S> params, const std::array<double, 2>& x) const;

 private:
  std::vector<int> sizes_;
  std::vector<std::size_t> offsets_;
  std::size_t count_ = 0;
  InputScaling scaling_;
  double output_scale_;
};

/// Parameter count sum_i (n_i n_{i+1} + n_{i+1}).
std::size_t param_count(const std::vector<int>& layer_sizes);

template <typename S>
std::vector<ad::Dual<S, 2>> Mlp::forward(std::span<const S> params, const std::array<double, 2>& x) const {
  using D = ad::Dual<S, 2>;
  std::vector<D> act(2);
  for (std::size_t k = 0; k < 2; ++k) {
    const double inv = 1.0 / scaling_.half_width[k];
    std::array<S, 2> tan{S(0.0), S(0.0)};
    tan[k] = S(inv);
    act[k] = D(S((x[k] - scaling_.center[k]) * inv), tan);
  }
  const std::size_t layers = sizes_.size() - 1;
  for (std::size_t l = 0; l < layers; ++l) {
    const auto n_in = static_cast<std::size_t>(sizes_[l]);
    const auto n_out = static_cast<std::size_t>(sizes_[l + 1]);
    const S* W = params.data() + offsets_[l];
    const S* b = W + n_in * n_out;
    std::vector<D> next(n_out);
    for (std::size_t i = 0; i < n_out; ++i) {
      D z(b[i]);
      for (std::size_t j = 0; j < n_in; ++j) {
        const S& w = W[i * n_in + j];
        z.value += w * act[j].value;
        z.d[0] += w * act[j].d[0];
        z.d[1] += w * act[j].d[1];
      }
      next[i] = (l + 1 < layers) ? tanh(z) : z * output_scale_;
    }
    act = std::move(next);
  }
  return act;
}

/**
 * Batched forward pass with spatial tangents and the matching hand-written
 * reverse sweep. Points are columns; value and tangent blocks are stacked
 * horizontally so each layer is one matrix product.
 */
class MlpBatch {
 public:
  explicit MlpBatch(const Mlp& net) : net_(&net) {}

  /// coords: 2 x P physical coordinates.
  void forward(std::span<const double> params, const Eigen::Matrix2Xd& coords);

  std::size_t points() const noexcept { return points_; }
  /// outputs x P blocks: 0 = value, 1 = d/dc0, 2 = d/dc1.
  auto output(int block) const {
    return out_.middleCols(static_cast<Eigen::Index>(block) * static_cast<Eigen::Index>(points_),
                           static_cast<Eigen::Index>(points_));
  }

  /**
   * Accumulates d(loss)/d(params) into grad given adjoints of the output
   * blocks (same layout as output(): outputs x 3P).
   */
  void backward(std::span<const double> params, const Eigen::MatrixXd& output_adjoint, std::span<double> grad);

 private:
  const Mlp* net_;
  std::size_t points_ = 0;
  std::vector<Eigen::MatrixXd> acts_;   // per layer input: n x 3P (value | t0 | t1)
  std::vector<Eigen::MatrixXd> slope_;  // per hidden layer: 1 - a^2, n x P
  std::vector<Eigen::MatrixXd> ztan_;   // per hidden layer: pre-activation tangents, n x 2P
  Eigen::MatrixXd out_;
  Eigen::MatrixXd adj_, zbar_, gw_;
  Eigen::VectorXd gb_;
};

}  // namespace vdem::field

#endif  // VDEM_FIELD_MLP_HPP
