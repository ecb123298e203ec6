#ifndef VDEM_TENSOR_HPP
#define VDEM_TENSOR_HPP

#include <array>

namespace vdem {

// Minimal fixed-size matrices over an arbitrary scalar type, so the same
// kinematic and constitutive code runs on reals, duals and tape variables.

template <typename T>
using Mat2 = std::array<std::array<T, 2>, 2>;

template <typename T>
using Mat3 = std::array<std::array<T, 3>, 3>;

template <typename T>
Mat3<T> identity3() {
  Mat3<T> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = T(i == j ? 1.0 : 0.0);
  return m;
}

template <typename T>
Mat3<T> zero3() {
  Mat3<T> m;
  for (auto& row : m)
    for (auto& x : row) x = T(0.0);
  return m;
}

template <typename T>
T det3(const Mat3<T>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

template <typename T>
T trace3(const Mat3<T>& m) {
  return m[0][0] + m[1][1] + m[2][2];
}

template <typename T>
Mat3<T> transpose3(const Mat3<T>& m) {
  Mat3<T> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = m[j][i];
  return r;
}

template <typename T>
Mat3<T> mul3(const Mat3<T>& a, const Mat3<T>& b) {
  Mat3<T> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      T s = a[i][0] * b[0][j];
      s += a[i][1] * b[1][j];
      s += a[i][2] * b[2][j];
      r[i][j] = s;
    }
  return r;
}

/// Left Cauchy-Green tensor B = F F^T.
template <typename T>
Mat3<T> left_cauchy_green(const Mat3<T>& f) {
  return mul3(f, transpose3(f));
}

/// tr(F F^T) without forming B.
template <typename T>
T first_invariant(const Mat3<T>& f) {
  T s = f[0][0] * f[0][0];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != 0 || j != 0) s += f[i][j] * f[i][j];
  return s;
}

inline Mat3<double> inverse3(const Mat3<double>& m) {
  const double d = det3(m);
  Mat3<double> r;
  r[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / d;
  r[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / d;
  r[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / d;
  r[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / d;
  r[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / d;
  r[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / d;
  r[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / d;
  r[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / d;
  r[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / d;
  return r;
}

}  // namespace vdem

#endif  // VDEM_TENSOR_HPP
