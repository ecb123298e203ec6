#ifndef VDEM_FIELD_BOUNDARY_HPP
#define VDEM_FIELD_BOUNDARY_HPP

#include <array>
#include <numbers>
#include <string>

#include "vdem/autodiff/dual.hpp"

namespace vdem::field {

/**
 * Closed-form hard boundary constructions u = N (.) b(x) + u_bar(x, t).
 *
 * Factors are evaluated as real duals over the two input coordinates, so
 * their spatial gradients are exact and stay off the parameter tape.
 */
struct BoundaryConstruction {
  enum class Kind {
    None,           // b = 1, u_bar = 0
    Relaxation,     // u_x = N_x x (L - x) + dL x / L,  u_y = N_y x
    Cantilever,     // u_x = N_x x,  u_y = N_y x
    QuarterRing,    // u_r = N_r,  u_theta = N_theta sin(theta) cos(theta)
    FixedOuter,     // u_r = N_r (r_o - r),  u_theta = N_theta sin(theta) cos(theta)
  };

  Kind kind = Kind::None;
  double length = 1.0;        // beam length L (Relaxation)
  double stretch = 0.0;       // prescribed end displacement dL (Relaxation)
  double outer_radius = 1.0;  // r_o (FixedOuter)

  struct Factors {
    std::array<ad::Dual2, 2> b;
    std::array<ad::Dual2, 2> u_bar;
  };

  Factors factors(const std::array<double, 2>& x, double t) const;

  /// Wrapped displacement with spatial derivatives.
  template <typename S>
  std::array<ad::Dual<S, 2>, 2> apply(const std::array<ad::Dual<S, 2>, 2>& net, const std::array<double, 2>& x,
                                      double t) const {
    const Factors f = factors(x, t);
    std::array<ad::Dual<S, 2>, 2> u;
    for (std::size_t c = 0; c < 2; ++c) u[c] = net[c] * ad::promote<S>(f.b[c]) + ad::promote<S>(f.u_bar[c]);
    return u;
  }

  std::string name() const;
  static Kind parse_kind(const std::string& s);
};

/// sin(theta) cos(theta) evaluated so that it is exactly zero at 0, pi/2 and pi.
ad::Dual2 sin_cos_factor(const ad::Dual2& theta);

}  // namespace vdem::field

#endif  // VDEM_FIELD_BOUNDARY_HPP
