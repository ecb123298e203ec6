#ifndef VDEM_FIELD_NEURAL_FIELD_HPP
#define VDEM_FIELD_NEURAL_FIELD_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "vdem/field/boundary.hpp"
#include "vdem/field/mlp.hpp"
#include "vdem/tensor.hpp"

namespace vdem::field {

enum class NetworkMode {
  Single,  // one network with two outputs
  Split,   // one scalar network per displacement component
};

inline const std::vector<int>& default_layer_sizes() {
  static const std::vector<int> sizes{2, 20, 20, 20, 2};
  return sizes;
}

/**
 * Displacement ansatz u(x, t_i) = N(x; phi) (.) b(x) + u_bar(x, t_i).
 *
 * Holds the flat parameter vector phi; in Split mode the first half belongs
 * to the network for component 0 and the second half to component 1.
 */
class NeuralField {
 public:
  NeuralField(std::vector<int> layer_sizes, NetworkMode mode, BoundaryConstruction bc, InputScaling scaling = {},
              std::array<double, 2> output_scale = {1.0, 1.0});

  /// Default architecture [2, 20, 20, 20, 2].
  static NeuralField make_default(BoundaryConstruction bc, InputScaling scaling = {}) {
    return NeuralField(default_layer_sizes(), NetworkMode::Single, bc, scaling);
  }

  void init_params(std::uint64_t seed);

  std::size_t param_count() const noexcept;
  std::span<const double> params() const noexcept { return params_; }
  std::span<double> params() noexcept { return params_; }
  void set_params(std::vector<double> p);

  std::uint64_t seed() const noexcept { return seed_; }
  NetworkMode mode() const noexcept { return mode_; }
  const BoundaryConstruction& boundary() const noexcept { return bc_; }
  const std::vector<int>& layer_sizes() const noexcept { return sizes_; }
  const std::vector<Mlp>& networks() const noexcept { return nets_; }

  /// Raw network outputs N(x) (before the boundary wrapper) with spatial tangents.
  template <typename S>
  std::array<ad::Dual<S, 2>, 2> network(std::span<const S> params, const std::array<double, 2>& x) const;

  /// Wrapped displacement with spatial derivatives, for any parameter scalar.
  template <typename S>
  std::array<ad::Dual<S, 2>, 2> displacement(std::span<const S> params, const std::array<double, 2>& x,
                                             double t) const {
    return bc_.apply(network(params, x), x, t);
  }

  /// u(x, t) with the current parameters.
  std::array<double, 2> evaluate(const std::array<double, 2>& x, double t) const;

  /// Parameter snapshot: '#' header with layer sizes, activation, mode and seed, then one value per line.
  void write_params(std::ostream& os) const;
  void read_params(std::istream& is);

 private:
  std::vector<int> sizes_;
  NetworkMode mode_;
  BoundaryConstruction bc_;
  std::vector<Mlp> nets_;
  std::vector<double> params_;
  std::uint64_t seed_ = 0;
};

template <typename S>
std::array<ad::Dual<S, 2>, 2> NeuralField::network(std::span<const S> params, const std::array<double, 2>& x) const {
  if (mode_ == NetworkMode::Single) {
    auto out = nets_[0].forward(params, x);
    return {out[0], out[1]};
  }
  const std::size_t n0 = nets_[0].param_count();
  auto o0 = nets_[0].forward(params.subspan(0, n0), x);
  auto o1 = nets_[1].forward(params.subspan(n0), x);
  return {o0[0], o1[0]};
}

/// d u_i / d x_j through the dual forward pass; entries are tape variables when S is.
template <typename S>
Mat2<S> spatial_jacobian(const NeuralField& field, std::span<const S> params, const std::array<double, 2>& x,
                         double t = 0.0) {
  const auto u = field.displacement(params, x, t);
  Mat2<S> J;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) J[i][j] = u[i].d[j];
  return J;
}

}  // namespace vdem::field

#endif  // VDEM_FIELD_NEURAL_FIELD_HPP
