#include "vdem/field/mlp.hpp"

#include <cmath>
#include <random>

#include "vdem/errors.hpp"

namespace vdem::field {

std::size_t param_count(const std::vector<int>& layer_sizes) {
  std::size_t n = 0;
  for (std::size_t i = 0; i + 1 < layer_sizes.size(); ++i)
    n += static_cast<std::size_t>(layer_sizes[i] * layer_sizes[i + 1] + layer_sizes[i + 1]);
  return n;
}

Mlp::Mlp(std::vector<int> layer_sizes, InputScaling scaling, double output_scale)
    : sizes_(std::move(layer_sizes)), scaling_(scaling), output_scale_(output_scale) {
  if (sizes_.size() < 2) throw DomainError("network needs at least an input and an output layer");
  for (int s : sizes_)
    if (s < 1) throw DomainError("layer sizes must be >= 1");
  if (sizes_.front() != 2) throw DomainError("network input dimension must be 2");
  std::size_t off = 0;
  for (std::size_t i = 0; i + 1 < sizes_.size(); ++i) {
    offsets_.push_back(off);
    off += static_cast<std::size_t>(sizes_[i] * sizes_[i + 1] + sizes_[i + 1]);
  }
  count_ = off;
}

std::vector<double> Mlp::init_params(std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  // 53-bit uniform in [0, 1); avoids implementation-defined distributions.
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<double> p(count_, 0.0);
  for (std::size_t l = 0; l + 1 < sizes_.size(); ++l) {
    const auto n_in = static_cast<std::size_t>(sizes_[l]);
    const auto n_out = static_cast<std::size_t>(sizes_[l + 1]);
    const double limit = std::sqrt(6.0 / static_cast<double>(n_in + n_out));
    double* W = p.data() + offsets_[l];
    for (std::size_t k = 0; k < n_in * n_out; ++k) W[k] = limit * (2.0 * uniform() - 1.0);
  }
  return p;
}

namespace {
using RowMajorMap = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
using RowMajorMutMap = Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
}  // namespace

void MlpBatch::forward(std::span<const double> params, const Eigen::Matrix2Xd& coords) {
  const auto& sizes = net_->layer_sizes();
  const auto& sc = net_->scaling();
  const Eigen::Index P = coords.cols();
  points_ = static_cast<std::size_t>(P);
  const std::size_t layers = sizes.size() - 1;
  acts_.resize(layers);
  slope_.resize(layers);
  ztan_.resize(layers);

  Eigen::MatrixXd& a0 = acts_[0];
  a0.resize(2, 3 * P);
  for (int k = 0; k < 2; ++k) {
    const double inv = 1.0 / sc.half_width[static_cast<std::size_t>(k)];
    a0.row(k).head(P) = (coords.row(k).array() - sc.center[static_cast<std::size_t>(k)]) * inv;
    a0.row(k).segment(P, P).setConstant(k == 0 ? inv : 0.0);
    a0.row(k).tail(P).setConstant(k == 1 ? inv : 0.0);
  }

  for (std::size_t l = 0; l < layers; ++l) {
    const int n_in = sizes[l];
    const int n_out = sizes[l + 1];
    RowMajorMap W(params.data() + net_->weight_offset(l), n_out, n_in);
    Eigen::Map<const Eigen::VectorXd> b(params.data() + net_->bias_offset(l), n_out);
    Eigen::MatrixXd z = W * acts_[l];
    z.leftCols(P).colwise() += b;
    if (l + 1 == layers) {
      out_ = z * net_->output_scale();
      break;
    }
    Eigen::MatrixXd& next = acts_[l + 1];
    next.resize(n_out, 3 * P);
    // tanh(z) = 1 - 2 / (exp(2z) + 1) with the vectorized exp; saturates cleanly to +-1.
    next.leftCols(P) = 1.0 - 2.0 / ((2.0 * z.leftCols(P).array()).exp() + 1.0);
    slope_[l] = 1.0 - next.leftCols(P).array().square();
    ztan_[l] = z.rightCols(2 * P);
    next.middleCols(P, P) = slope_[l].cwiseProduct(ztan_[l].leftCols(P));
    next.rightCols(P) = slope_[l].cwiseProduct(ztan_[l].rightCols(P));
  }
}

void MlpBatch::backward(std::span<const double> params, const Eigen::MatrixXd& output_adjoint, std::span<double> grad) {
  const auto& sizes = net_->layer_sizes();
  const auto P = static_cast<Eigen::Index>(points_);
  const std::size_t layers = sizes.size() - 1;

  zbar_ = output_adjoint * net_->output_scale();
  for (std::size_t l = layers; l-- > 0;) {
    const int n_in = sizes[l];
    const int n_out = sizes[l + 1];
    RowMajorMap W(params.data() + net_->weight_offset(l), n_out, n_in);
    RowMajorMutMap gW(grad.data() + net_->weight_offset(l), n_out, n_in);
    Eigen::Map<Eigen::VectorXd> gb(grad.data() + net_->bias_offset(l), n_out);

    // Products go to owned storage first: Eigen's kernels round differently
    // depending on the alignment of the destination buffer.
    gw_.noalias() = zbar_ * acts_[l].transpose();
    gW += gw_;
    gb_ = zbar_.leftCols(P).rowwise().sum();
    gb += gb_;
    if (l == 0) break;

    adj_.noalias() = W.transpose() * zbar_;
    // Through a = tanh(z), a_t = (1 - a^2) z_t.
    const std::size_t h = l - 1;
    const auto& S = slope_[h];
    const auto a = acts_[l].leftCols(P);
    Eigen::MatrixXd sbar = adj_.middleCols(P, P).cwiseProduct(ztan_[h].leftCols(P)) +
                           adj_.rightCols(P).cwiseProduct(ztan_[h].rightCols(P));
    zbar_.resize(n_in, 3 * P);
    zbar_.leftCols(P) = (adj_.leftCols(P).array() - 2.0 * sbar.array() * a.array()) * S.array();
    zbar_.middleCols(P, P) = adj_.middleCols(P, P).cwiseProduct(S);
    zbar_.rightCols(P) = adj_.rightCols(P).cwiseProduct(S);
  }
}

}  // namespace vdem::field
