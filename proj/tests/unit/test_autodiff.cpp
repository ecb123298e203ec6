#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "vdem/autodiff/dual.hpp"
#include "vdem/autodiff/tape.hpp"
#include "vdem/errors.hpp"
#include "vdem/field/neural_field.hpp"

using namespace vdem;
using ad::Dual2;
using ad::Var;

namespace {

// Small tanh network with three inputs and one output, written directly on
// the tape so the test does not depend on the library network code.
struct TinyNet {
  std::vector<int> sizes{3, 20, 20, 20, 2};

  std::size_t count() const {
    std::size_t n = 0;
    for (std::size_t l = 0; l + 1 < sizes.size(); ++l) n += sizes[l] * sizes[l + 1] + sizes[l + 1];
    return n;
  }

  template <typename S>
  std::vector<S> forward(const std::vector<S>& p, const std::array<double, 3>& x) const {
    std::vector<S> act{S(x[0]), S(x[1]), S(x[2])};
    std::size_t off = 0;
    for (std::size_t l = 0; l + 1 < sizes.size(); ++l) {
      const auto ni = static_cast<std::size_t>(sizes[l]), no = static_cast<std::size_t>(sizes[l + 1]);
      std::vector<S> next(no);
      for (std::size_t i = 0; i < no; ++i) {
        S z = p[off + ni * no + i];
        for (std::size_t j = 0; j < ni; ++j) z = z + p[off + i * ni + j] * act[j];
        using std::tanh;
        next[i] = l + 2 < sizes.size() ? tanh(z) : z;
      }
      off += ni * no + no;
      act = std::move(next);
    }
    return act;
  }

  template <typename S>
  S loss(const std::vector<S>& p, const std::vector<std::array<double, 3>>& xs) const {
    S total = 0.0;
    for (const auto& x : xs) {
      const auto y = forward(p, x);
      total = total + y[0] * y[0] + y[1] * y[1];
    }
    return total / static_cast<double>(xs.size());
  }
};

std::vector<double> tape_gradient(const TinyNet& net, const std::vector<double>& p,
                                  const std::vector<std::array<double, 3>>& xs) {
  ad::Tape tape;
  ad::TapeScope scope(tape);
  std::vector<Var> v;
  for (double x : p) v.push_back(Var::leaf(x));
  return ad::param_gradient(net.loss(v, xs), v);
}

}  // namespace

TEST_CASE("lift_spatial seeds unit tangents") {
  const auto [x, y] = ad::lift_spatial(0.3, -1.2);
  CHECK(x.value == 0.3);
  CHECK(y.value == -1.2);
  CHECK(x.d[0] == 1.0);
  CHECK(x.d[1] == 0.0);
  CHECK(y.d[0] == 0.0);
  CHECK(y.d[1] == 1.0);
}

TEST_CASE("spatial derivatives of simple products") {
  const auto [x, y] = ad::lift_spatial(3.0, 2.0);
  const Dual2 xy = x * y;
  CHECK(xy.value == 6.0);
  CHECK(xy.d[0] == 2.0);
  CHECK(xy.d[1] == 3.0);
  const Dual2 xx = x * x;
  CHECK(xx.d[0] == 6.0);
  CHECK(xx.d[1] == 0.0);
}

TEST_CASE("elementary dual functions match analytic derivatives") {
  const auto [x, y] = ad::lift_spatial(0.7, 1.3);
  CHECK(exp(x).d[0] == doctest::Approx(std::exp(0.7)));
  CHECK(log(y).d[1] == doctest::Approx(1.0 / 1.3));
  CHECK(tanh(x).d[0] == doctest::Approx(1.0 - std::tanh(0.7) * std::tanh(0.7)));
  CHECK(sqrt(y).d[1] == doctest::Approx(0.5 / std::sqrt(1.3)));
  CHECK(pow(x, 3.0).d[0] == doctest::Approx(3.0 * 0.49));
  CHECK((x / y).d[1] == doctest::Approx(-0.7 / (1.3 * 1.3)));
  CHECK(sin(x).d[0] == doctest::Approx(std::cos(0.7)));
  CHECK(cos(y).d[1] == doctest::Approx(-std::sin(1.3)));
}

TEST_CASE("tape gradient of a quadratic") {
  ad::Tape tape;
  ad::TapeScope scope(tape);
  std::vector<Var> p{Var::leaf(1.0), Var::leaf(-2.0)};
  const Var loss = p[0] * p[0] + p[1] * p[1];
  const auto g = ad::param_gradient(loss, p);
  CHECK(g[0] == 2.0);
  CHECK(g[1] == -4.0);
}

TEST_CASE("constant loss has zero gradient") {
  ad::Tape tape;
  ad::TapeScope scope(tape);
  std::vector<Var> p{Var::leaf(1.0), Var::leaf(5.0)};
  const auto g = ad::param_gradient(Var(4.0), p);
  CHECK(g == std::vector<double>{0.0, 0.0});
}

TEST_CASE("elementary tape operations match analytic derivatives") {
  ad::Tape tape;
  ad::TapeScope scope(tape);
  std::vector<Var> p{Var::leaf(0.6), Var::leaf(1.7)};
  CHECK(ad::param_gradient(exp(p[0]), p)[0] == doctest::Approx(std::exp(0.6)));
  CHECK(ad::param_gradient(log(p[1]), p)[1] == doctest::Approx(1.0 / 1.7));
  CHECK(ad::param_gradient(tanh(p[0]), p)[0] == doctest::Approx(1.0 - std::tanh(0.6) * std::tanh(0.6)));
  CHECK(ad::param_gradient(sqrt(p[1]), p)[1] == doctest::Approx(0.5 / std::sqrt(1.7)));
  CHECK(ad::param_gradient(pow(p[1], 2.5), p)[1] == doctest::Approx(2.5 * std::pow(1.7, 1.5)));
  const auto g = ad::param_gradient(p[0] / p[1], p);
  CHECK(g[0] == doctest::Approx(1.0 / 1.7));
  CHECK(g[1] == doctest::Approx(-0.6 / (1.7 * 1.7)));
  CHECK(ad::param_gradient(-p[0] - 2.0 * p[1], p)[1] == -2.0);
  CHECK(ad::param_gradient(3.0 / p[0], p)[0] == doctest::Approx(-3.0 / 0.36));
}

TEST_CASE("non-finite loss is reported") {
  ad::Tape tape;
  ad::TapeScope scope(tape);
  std::vector<Var> p{Var::leaf(-1.0)};
  CHECK_THROWS_AS(ad::param_gradient(log(p[0]), p), NonFiniteLoss);
  CHECK_THROWS_AS(ad::param_gradient(p[0] / 0.0, p), NonFiniteLoss);
}

TEST_CASE("network loss gradient matches central differences") {
  TinyNet net;
  std::mt19937_64 rng(7);
  std::normal_distribution<double> n01(0.0, 0.3);
  std::uniform_real_distribution<double> u11(-1.0, 1.0);
  std::vector<double> p(net.count());
  for (double& x : p) x = n01(rng);
  std::vector<std::array<double, 3>> xs(50);
  for (auto& x : xs) x = {u11(rng), u11(rng), u11(rng)};

  const auto g = tape_gradient(net, p, xs);
  std::uniform_int_distribution<std::size_t> pick(0, p.size() - 1);
  double worst = 0.0;
  for (int k = 0; k < 40; ++k) {
    const std::size_t i = pick(rng);
    auto pp = p, pm = p;
    const double h = 1e-6;
    pp[i] += h;
    pm[i] -= h;
    const double fd = (net.loss(pp, xs) - net.loss(pm, xs)) / (2.0 * h);
    worst = std::max(worst, std::abs(fd - g[i]) / std::max(std::abs(fd), 1e-6));
  }
  CHECK(worst < 1e-5);
}

TEST_CASE("gradient is linear in the loss") {
  TinyNet net;
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n01(0.0, 0.3);
  std::vector<double> p(net.count());
  for (double& x : p) x = n01(rng);
  const std::vector<std::array<double, 3>> xs{{0.1, 0.2, 0.3}, {-0.5, 0.4, 0.9}};

  ad::Tape tape;
  ad::TapeScope scope(tape);
  std::vector<Var> v;
  for (double x : p) v.push_back(Var::leaf(x));
  const Var a = net.loss(v, xs);
  const Var b = net.forward(v, xs[0])[0];
  const auto ga = ad::param_gradient(a, v);
  const auto gb = ad::param_gradient(b, v);
  const auto gc = ad::param_gradient(2.5 * a - 0.5 * b, v);
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(gc[i] == doctest::Approx(2.5 * ga[i] - 0.5 * gb[i]));
}

TEST_CASE("repeated gradient evaluations are bit identical") {
  TinyNet net;
  std::vector<double> p(net.count());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::sin(0.37 * static_cast<double>(i));
  const std::vector<std::array<double, 3>> xs{{0.1, 0.2, 0.3}, {-0.5, 0.4, 0.9}};
  CHECK(tape_gradient(net, p, xs) == tape_gradient(net, p, xs));
}

TEST_CASE("forward-over-reverse: gradient of a spatial-gradient loss") {
  field::NeuralField f = field::NeuralField::make_default({});
  f.init_params(11);
  const std::vector<std::array<double, 2>> xs{{0.2, -0.4}, {0.9, 0.1}, {-0.6, 0.7}};
  auto loss = [&](std::span<const double> p) {
    double s = 0.0;
    for (const auto& x : xs) {
      const auto J = field::spatial_jacobian<double>(f, p, x);
      s += J[0][0] * J[0][0] + J[0][1] * J[1][0] + std::exp(J[1][1]);
    }
    return s;
  };

  ad::Tape tape;
  ad::TapeScope scope(tape);
  std::vector<Var> v;
  for (double x : f.params()) v.push_back(Var::leaf(x));
  Var total = 0.0;
  for (const auto& x : xs) {
    const auto J = field::spatial_jacobian<Var>(f, std::span<const Var>(v), x);
    total = total + J[0][0] * J[0][0] + J[0][1] * J[1][0] + exp(J[1][1]);
  }
  CHECK(total.value() == doctest::Approx(loss(f.params())).epsilon(1e-14));
  const auto g = ad::param_gradient(total, v);

  std::vector<double> p(f.params().begin(), f.params().end());
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, p.size() - 1);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const std::size_t i = pick(rng);
    auto pp = p, pm = p;
    const double h = 1e-6;
    pp[i] += h;
    pm[i] -= h;
    const double fd = (loss(pp) - loss(pm)) / (2.0 * h);
    worst = std::max(worst, std::abs(fd - g[i]) / std::max(std::abs(fd), 1e-6));
  }
  CHECK(worst < 1e-5);
}
