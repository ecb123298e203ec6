#ifndef VDEM_AUTODIFF_DUAL_HPP
#define VDEM_AUTODIFF_DUAL_HPP

#include <array>
#include <cmath>
#include <cstddef>

namespace vdem::ad {

/**
 * Forward-mode dual number with a fixed number of tangent directions.
 *
 * The component type T may itself be a differentiable scalar (e.g. a tape
 * variable), which is how spatial derivatives stay differentiable with
 * respect to network parameters.
 */
template <typename T, std::size_t N>
struct Dual {
  T value{};
  std::array<T, N> d{};

  Dual() = default;
  Dual(const T& v) : value(v) {
    for (auto& x : d) x = T(0.0);
  }
  Dual(const T& v, const std::array<T, N>& tangents) : value(v), d(tangents) {}

  static constexpr std::size_t width = N;

  Dual& operator+=(const Dual& o) { return *this = *this + o; }
  Dual& operator-=(const Dual& o) { return *this = *this - o; }
  Dual& operator*=(const Dual& o) { return *this = *this * o; }
  Dual& operator/=(const Dual& o) { return *this = *this / o; }
};

template <typename T, std::size_t N>
Dual<T, N> operator+(const Dual<T, N>& a, const Dual<T, N>& b) {
  Dual<T, N> r;
  r.value = a.value + b.value;
  for (std::size_t i = 0; i < N; ++i) r.d[i] = a.d[i] + b.d[i];
  return r;
}

template <typename T, std::size_t N>
Dual<T, N> operator-(const Dual<T, N>& a, const Dual<T, N>& b) {
  Dual<T, N> r;
  r.value = a.value - b.value;
  for (std::size_t i = 0; i < N; ++i) r.d[i] = a.d[i] - b.d[i];
  return r;
}

template <typename T, std::size_t N>
Dual<T, N> operator-(const Dual<T, N>& a) {
  Dual<T, N> r;
  r.value = -a.value;
  for (std::size_t i = 0; i < N; ++i) r.d[i] = -a.d[i];
  return r;
}

template <typename T, std::size_t N>
Dual<T, N> operator*(const Dual<T, N>& a, const Dual<T, N>& b) {
  Dual<T, N> r;
  r.value = a.value * b.value;
  for (std::size_t i = 0; i < N; ++i) r.d[i] = a.d[i] * b.value + a.value * b.d[i];
  return r;
}

template <typename T, std::size_t N>
Dual<T, N> operator/(const Dual<T, N>& a, const Dual<T, N>& b) {
  Dual<T, N> r;
  const T inv = T(1.0) / b.value;
  r.value = a.value * inv;
  for (std::size_t i = 0; i < N; ++i) r.d[i] = (a.d[i] - r.value * b.d[i]) * inv;
  return r;
}

// Mixed operations with plain reals.
template <typename T, std::size_t N>
Dual<T, N> operator+(const Dual<T, N>& a, double b) {
  Dual<T, N> r = a;
  r.value = a.value + b;
  return r;
}
template <typename T, std::size_t N>
Dual<T, N> operator+(double a, const Dual<T, N>& b) {
  return b + a;
}
template <typename T, std::size_t N>
Dual<T, N> operator-(const Dual<T, N>& a, double b) {
  Dual<T, N> r = a;
  r.value = a.value - b;
  return r;
}
template <typename T, std::size_t N>
Dual<T, N> operator-(double a, const Dual<T, N>& b) {
  Dual<T, N> r = -b;
  r.value = a - b.value;
  return r;
}
template <typename T, std::size_t N>
Dual<T, N> operator*(const Dual<T, N>& a, double b) {
  Dual<T, N> r;
  r.value = a.value * b;
  for (std::size_t i = 0; i < N; ++i) r.d[i] = a.d[i] * b;
  return r;
}
template <typename T, std::size_t N>
Dual<T, N> operator*(double a, const Dual<T, N>& b) {
  return b * a;
}
template <typename T, std::size_t N>
Dual<T, N> operator/(const Dual<T, N>& a, double b) {
  Dual<T, N> r;
  r.value = a.value / b;
  for (std::size_t i = 0; i < N; ++i) r.d[i] = a.d[i] / b;
  return r;
}

// Elementary functions: chain rule on each tangent.
template <typename T, std::size_t N>
Dual<T, N> chain(const Dual<T, N>& a, const T& f, const T& df) {
  Dual<T, N> r;
  r.value = f;
  for (std::size_t i = 0; i < N; ++i) r.d[i] = df * a.d[i];
  return r;
}

template <typename T, std::size_t N>
Dual<T, N> exp(const Dual<T, N>& a) {
  using std::exp;
  const T e = exp(a.value);
  return chain(a, e, e);
}

template <typename T, std::size_t N>
Dual<T, N> log(const Dual<T, N>& a) {
  using std::log;
  return chain(a, T(log(a.value)), T(1.0) / a.value);
}

template <typename T, std::size_t N>
Dual<T, N> tanh(const Dual<T, N>& a) {
  using std::tanh;
  const T t = tanh(a.value);
  return chain(a, t, T(1.0) - t * t);
}

template <typename T, std::size_t N>
Dual<T, N> sqrt(const Dual<T, N>& a) {
  using std::sqrt;
  const T s = sqrt(a.value);
  return chain(a, s, T(0.5) / s);
}

template <typename T, std::size_t N>
Dual<T, N> pow(const Dual<T, N>& a, double p) {
  using std::pow;
  return chain(a, T(pow(a.value, p)), T(p * pow(a.value, p - 1.0)));
}

// sin/cos are only used on coordinate-only quantities (distance factors),
// never on parameter-dependent values, so they are limited to real duals.
template <std::size_t N>
Dual<double, N> sin(const Dual<double, N>& a) {
  return chain(a, std::sin(a.value), std::cos(a.value));
}

template <std::size_t N>
Dual<double, N> cos(const Dual<double, N>& a) {
  return chain(a, std::cos(a.value), -std::sin(a.value));
}

/// Promote a real dual to a dual over another scalar type (constants only).
template <typename T, std::size_t N>
Dual<T, N> promote(const Dual<double, N>& a) {
  Dual<T, N> r;
  r.value = T(a.value);
  for (std::size_t i = 0; i < N; ++i) r.d[i] = T(a.d[i]);
  return r;
}

using Dual2 = Dual<double, 2>;

/// Seed a coordinate pair with identity tangent directions.
template <typename T = double>
std::array<Dual<T, 2>, 2> lift_spatial(double x, double y) {
  Dual<T, 2> dx(T(x), {T(1.0), T(0.0)});
  Dual<T, 2> dy(T(y), {T(0.0), T(1.0)});
  return {dx, dy};
}

}  // namespace vdem::ad

#endif  // VDEM_AUTODIFF_DUAL_HPP
