#include "vdem/field/neural_field.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "vdem/errors.hpp"

namespace vdem::field {

NeuralField::NeuralField(std::vector<int> layer_sizes, NetworkMode mode, BoundaryConstruction bc,
                         InputScaling scaling, std::array<double, 2> output_scale)
    : sizes_(std::move(layer_sizes)), mode_(mode), bc_(bc) {
  if (sizes_.size() < 2 || sizes_.back() != 2)
    throw DomainError("displacement networks are described with two outputs");
  if (mode_ == NetworkMode::Single) {
    nets_.emplace_back(sizes_, scaling, output_scale[0]);
    if (output_scale[0] != output_scale[1]) throw DomainError("single network needs one output scale");
  } else {
    std::vector<int> scalar = sizes_;
    scalar.back() = 1;
    nets_.emplace_back(scalar, scaling, output_scale[0]);
    nets_.emplace_back(scalar, scaling, output_scale[1]);
  }
  params_.assign(param_count(), 0.0);
}

std::size_t NeuralField::param_count() const noexcept {
  std::size_t n = 0;
  for (const auto& net : nets_) n += net.param_count();
  return n;
}

void NeuralField::init_params(std::uint64_t seed) {
  seed_ = seed;
  params_.clear();
  for (std::size_t k = 0; k < nets_.size(); ++k) {
    // Distinct streams per component network.
    auto p = nets_[k].init_params(seed + 0x9E3779B97F4A7C15ULL * k);
    params_.insert(params_.end(), p.begin(), p.end());
  }
}

void NeuralField::set_params(std::vector<double> p) {
  if (p.size() != param_count()) throw DomainError("parameter vector has the wrong length");
  params_ = std::move(p);
}

std::array<double, 2> NeuralField::evaluate(const std::array<double, 2>& x, double t) const {
  const auto u = displacement<double>(params_, x, t);
  return {u[0].value, u[1].value};
}

void NeuralField::write_params(std::ostream& os) const {
  os << "# layers=";
  for (std::size_t i = 0; i < sizes_.size(); ++i) os << (i ? "," : "") << sizes_[i];
  os << " activation=tanh mode=" << (mode_ == NetworkMode::Single ? "single" : "split") << " seed=" << seed_
     << " count=" << params_.size() << '\n';
  std::ostringstream buf;
  buf.precision(17);
  for (double p : params_) buf << p << '\n';
  os << buf.str();
}

void NeuralField::read_params(std::istream& is) {
  std::string header;
  std::getline(is, header);
  if (header.rfind("# layers=", 0) != 0) throw DomainError("parameter snapshot is missing its header");
  std::istringstream hs(header.substr(2));
  std::string token;
  std::vector<int> sizes;
  std::uint64_t seed = 0;
  std::string mode;
  while (hs >> token) {
    const auto eq = token.find('=');
    const std::string key = token.substr(0, eq);
    const std::string val = token.substr(eq + 1);
    if (key == "layers") {
      std::istringstream ls(val);
      std::string n;
      while (std::getline(ls, n, ',')) sizes.push_back(std::stoi(n));
    } else if (key == "seed") {
      seed = std::stoull(val);
    } else if (key == "mode") {
      mode = val;
    } else if (key == "activation" && val != "tanh") {
      throw DomainError("unsupported activation '" + val + "'");
    }
  }
  if (sizes != sizes_) throw DomainError("parameter snapshot layer sizes do not match the field");
  if ((mode == "single") != (mode_ == NetworkMode::Single)) throw DomainError("parameter snapshot mode mismatch");
  std::vector<double> p;
  p.reserve(param_count());
  double v = 0.0;
  while (is >> v) p.push_back(v);
  set_params(std::move(p));
  seed_ = seed;
}

}  // namespace vdem::field
