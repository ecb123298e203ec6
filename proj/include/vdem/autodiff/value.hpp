#ifndef VDEM_AUTODIFF_VALUE_HPP
#define VDEM_AUTODIFF_VALUE_HPP

#include <cstddef>

#include "vdem/autodiff/dual.hpp"
#include "vdem/autodiff/tape.hpp"

namespace vdem::ad {

// Underlying real value of any supported scalar.
inline double value_of(double x) { return x; }
inline double value_of(const Var& x) { return x.v; }
template <typename T, std::size_t N>
double value_of(const Dual<T, N>& x) {
  return value_of(x.value);
}

}  // namespace vdem::ad

#endif  // VDEM_AUTODIFF_VALUE_HPP
