#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "vdem/errors.hpp"
#include "vdem/field/mlp.hpp"
#include "vdem/field/neural_field.hpp"

using namespace vdem;
using field::BoundaryConstruction;
using field::NeuralField;
using Kind = BoundaryConstruction::Kind;

TEST_CASE("default architecture parameter count") {
  CHECK(field::param_count({2, 20, 20, 20, 2}) == 942);
  NeuralField f = NeuralField::make_default({});
  CHECK(f.param_count() == 942);
  NeuralField split(field::default_layer_sizes(), field::NetworkMode::Split, {});
  CHECK(split.param_count() == 2 * field::param_count({2, 20, 20, 20, 1}));
}

TEST_CASE("initialization is seeded") {
  NeuralField a = NeuralField::make_default({});
  NeuralField b = NeuralField::make_default({});
  a.init_params(42);
  b.init_params(42);
  CHECK(std::vector<double>(a.params().begin(), a.params().end()) ==
        std::vector<double>(b.params().begin(), b.params().end()));

  b.init_params(43);
  std::size_t differ = 0, weights = 0;
  const auto& net = a.networks()[0];
  for (std::size_t l = 0; l + 1 < net.layer_sizes().size(); ++l)
    for (std::size_t i = net.weight_offset(l); i < net.bias_offset(l); ++i, ++weights)
      differ += a.params()[i] != b.params()[i];
  CHECK(static_cast<double>(differ) >= 0.9 * static_cast<double>(weights));
}

TEST_CASE("zero network gives the particular solution") {
  BoundaryConstruction bc{Kind::Relaxation, 10.0, 1.0};
  NeuralField f = NeuralField::make_default(bc);
  f.set_params(std::vector<double>(f.param_count(), 0.0));
  const auto J = field::spatial_jacobian<double>(f, f.params(), {3.0, 0.5});
  CHECK(J[0][0] == doctest::Approx(0.1));
  CHECK(J[0][1] == 0.0);
  CHECK(J[1][0] == 0.0);
  CHECK(J[1][1] == 0.0);

  NeuralField g = NeuralField::make_default({});
  g.set_params(std::vector<double>(g.param_count(), 0.0));
  const auto u = g.evaluate({0.3, 0.4}, 0.0);
  CHECK(u[0] == 0.0);
  CHECK(u[1] == 0.0);
}

TEST_CASE("single tanh neuron has unit slope at the origin") {
  field::Mlp net({2, 1, 1});
  REQUIRE(net.param_count() == 5);
  const std::vector<double> p{1.0, 0.0, 0.0, 1.0, 0.0};
  const auto out = net.forward<double>(p, {0.0, 0.0});
  CHECK(out[0].value == 0.0);
  CHECK(out[0].d[0] == doctest::Approx(1.0));
  CHECK(out[0].d[1] == 0.0);
}

TEST_CASE("spatial jacobian matches finite differences") {
  const auto scaling = field::InputScaling::from_bounds({0.0, 10.0, 0.0, 1.0});
  NeuralField f(field::default_layer_sizes(), field::NetworkMode::Single, {Kind::Cantilever}, scaling);
  f.init_params(9);
  const double h = 1e-6;
  for (const std::array<double, 2> x : {std::array<double, 2>{1.5, 0.25}, {7.0, 0.8}, {9.9, 0.05}}) {
    const auto J = field::spatial_jacobian<double>(f, f.params(), x);
    for (std::size_t j = 0; j < 2; ++j) {
      auto xp = x, xm = x;
      xp[j] += h;
      xm[j] -= h;
      const auto up = f.evaluate(xp, 0.0), um = f.evaluate(xm, 0.0);
      for (std::size_t i = 0; i < 2; ++i) CHECK(std::abs(J[i][j] - (up[i] - um[i]) / (2.0 * h)) < 1e-7);
    }
  }
}

TEST_CASE("batched kernel agrees with the generic forward pass") {
  field::Mlp net({2, 20, 20, 20, 2}, field::InputScaling::from_bounds({0.0, 10.0, 0.0, 1.0}), 0.1);
  const auto p = net.init_params(4);
  Eigen::Matrix2Xd xs(2, 5);
  xs << 0.1, 2.0, 5.5, 8.0, 9.9, 0.05, 0.3, 0.5, 0.7, 0.95;
  field::MlpBatch batch(net);
  batch.forward(p, xs);
  for (Eigen::Index c = 0; c < xs.cols(); ++c) {
    const auto ref = net.forward<double>(p, {xs(0, c), xs(1, c)});
    for (Eigen::Index o = 0; o < 2; ++o) {
      CHECK(batch.output(0)(o, c) == doctest::Approx(ref[o].value).epsilon(1e-13));
      CHECK(batch.output(1)(o, c) == doctest::Approx(ref[o].d[0]).epsilon(1e-13));
      CHECK(batch.output(2)(o, c) == doctest::Approx(ref[o].d[1]).epsilon(1e-13));
    }
  }
}

TEST_CASE("hard boundary conditions hold exactly for any parameters") {
  constexpr double pi = std::numbers::pi;
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> uy(0.0, 1.0);
  std::uniform_real_distribution<double> ur(0.9, 1.0);

  NeuralField relax = NeuralField::make_default({Kind::Relaxation, 10.0, 1.0});
  NeuralField cant = NeuralField::make_default({Kind::Cantilever});
  NeuralField ring = NeuralField::make_default({Kind::QuarterRing});
  BoundaryConstruction fo{Kind::FixedOuter};
  fo.outer_radius = 1.0;
  NeuralField outer = NeuralField::make_default(fo);

  int failures = 0;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    for (NeuralField* f : {&relax, &cant, &ring, &outer}) f->init_params(s);
    const double y = uy(rng), r = ur(rng), th = pi * uy(rng);
    const auto a = relax.evaluate({0.0, y}, 0.0);
    const auto b = relax.evaluate({10.0, y}, 0.0);
    const auto c = cant.evaluate({0.0, y}, 0.0);
    const auto d0 = ring.evaluate({r, 0.0}, 0.0);
    const auto d1 = ring.evaluate({r, pi / 2.0}, 0.0);
    const auto e0 = outer.evaluate({1.0, th}, 0.0);
    const auto e1 = outer.evaluate({r, 0.0}, 0.0);
    const auto e2 = outer.evaluate({r, pi / 2.0}, 0.0);
    const auto e3 = outer.evaluate({r, pi}, 0.0);
    failures += a[0] != 0.0 || a[1] != 0.0 || b[0] != 1.0 || c[0] != 0.0 || c[1] != 0.0 || d0[1] != 0.0 ||
                d1[1] != 0.0 || e0[0] != 0.0 || e1[1] != 0.0 || e2[1] != 0.0 || e3[1] != 0.0;
  }
  CHECK(failures == 0);
}

TEST_CASE("parameter snapshots round trip") {
  NeuralField f = NeuralField::make_default({Kind::Cantilever});
  f.init_params(77);
  std::stringstream ss;
  f.write_params(ss);
  const std::string text = ss.str();
  CHECK(text.rfind("# layers=2,20,20,20,2 activation=tanh mode=single seed=77", 0) == 0);

  NeuralField g = NeuralField::make_default({Kind::Cantilever});
  g.read_params(ss);
  CHECK(std::vector<double>(f.params().begin(), f.params().end()) ==
        std::vector<double>(g.params().begin(), g.params().end()));

  NeuralField small({2, 5, 2}, field::NetworkMode::Single, {});
  std::stringstream again(text);
  CHECK_THROWS_AS(small.read_params(again), DomainError);
}

TEST_CASE("invalid architectures are rejected") {
  CHECK_THROWS(NeuralField({3, 20, 2}, field::NetworkMode::Single, {}));
  CHECK_THROWS(NeuralField({2, 20, 3}, field::NetworkMode::Single, {}));
  CHECK_THROWS(NeuralField({2, 20, 2}, field::NetworkMode::Single, {}, {}, {1.0, 2.0}));
  CHECK_THROWS_AS(BoundaryConstruction::parse_kind("pinned"), DomainError);
}
