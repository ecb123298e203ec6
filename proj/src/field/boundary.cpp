#include "vdem/field/boundary.hpp"

#include "vdem/errors.hpp"

namespace vdem::field {

using ad::Dual2;

Dual2 sin_cos_factor(const Dual2& theta) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  constexpr double pi = std::numbers::pi;
  // Pick the algebraically identical form whose argument is exactly zero at
  // the symmetry lines, so the factor vanishes bit-exactly there.
  const Dual2 s = theta.value <= half_pi ? ad::sin(theta) : ad::sin(pi - theta);
  const Dual2 c = ad::sin(half_pi - theta);
  return s * c;
}

BoundaryConstruction::Factors BoundaryConstruction::factors(const std::array<double, 2>& x, double /*t*/) const {
  const auto in = ad::lift_spatial(x[0], x[1]);
  const Dual2 one(1.0);
  const Dual2 zero(0.0);
  switch (kind) {
    case Kind::None:
      return {{one, one}, {zero, zero}};
    case Kind::Relaxation: {
      // Held from t = 0 onwards.
      const Dual2 bx = in[0] * (length - in[0]);
      return {{bx, in[0]}, {in[0] * stretch / length, zero}};
    }
    case Kind::Cantilever:
      return {{in[0], in[0]}, {zero, zero}};
    case Kind::QuarterRing:
      return {{one, sin_cos_factor(in[1])}, {zero, zero}};
    case Kind::FixedOuter:
      return {{outer_radius - in[0], sin_cos_factor(in[1])}, {zero, zero}};
  }
  return {{one, one}, {zero, zero}};
}

std::string BoundaryConstruction::name() const {
  switch (kind) {
    case Kind::None: return "none";
    case Kind::Relaxation: return "relaxation";
    case Kind::Cantilever: return "cantilever";
    case Kind::QuarterRing: return "quarter_ring";
    case Kind::FixedOuter: return "fixed_outer";
  }
  return "none";
}

BoundaryConstruction::Kind BoundaryConstruction::parse_kind(const std::string& s) {
  if (s == "none") return Kind::None;
  if (s == "relaxation") return Kind::Relaxation;
  if (s == "cantilever") return Kind::Cantilever;
  if (s == "quarter_ring") return Kind::QuarterRing;
  if (s == "fixed_outer") return Kind::FixedOuter;
  throw DomainError("unknown boundary construction '" + s + "'");
}

}  // namespace vdem::field
