#ifndef VDEM_DOMAIN_DOMAIN_HPP
#define VDEM_DOMAIN_DOMAIN_HPP

#include <array>
#include <map>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "vdem/kinematics/kinematics.hpp"

namespace vdem::domain {

using Point2 = std::array<double, 2>;

struct CollocationPoint {
  Point2 x;       // (x, y) or (r, theta)
  double weight;  // dV (plane measure; r dr dtheta in polar)
};

struct BoundaryPoint {
  Point2 x;
  double weight;  // dS
  Point2 normal;  // outward, in the domain's component frame
};

struct BeamGeometry {
  double length;
  double height;
};

struct AnnulusGeometry {
  double r_inner;
  double r_outer;
  double theta_span;
};

/**
 * Cell-centred collocation set with midpoint quadrature weights and named
 * boundary sample sets. Immutable after construction.
 */
class Domain {
 public:
  Domain(std::vector<CollocationPoint> points, std::map<std::string, std::vector<BoundaryPoint>> boundaries,
         kinematics::CoordinateSystem coordinates, std::variant<BeamGeometry, AnnulusGeometry> geometry);

  const std::vector<CollocationPoint>& points() const noexcept { return points_; }
  const std::vector<BoundaryPoint>& boundary(const std::string& name) const;
  bool has_boundary(const std::string& name) const { return boundaries_.count(name) != 0; }
  const std::map<std::string, std::vector<BoundaryPoint>>& boundaries() const noexcept { return boundaries_; }
  kinematics::CoordinateSystem coordinates() const noexcept { return coordinates_; }
  const std::variant<BeamGeometry, AnnulusGeometry>& geometry() const noexcept { return geometry_; }

  double total_weight() const;
  double boundary_weight(const std::string& name) const;

  /// Bounding box of the parameter coordinates: {min0, max0, min1, max1}.
  std::array<double, 4> bounds() const;

  /// Point-cloud CSV (columns: set, c0, c1, weight).
  void write_csv(std::ostream& os) const;

 private:
  std::vector<CollocationPoint> points_;
  std::map<std::string, std::vector<BoundaryPoint>> boundaries_;
  kinematics::CoordinateSystem coordinates_;
  std::variant<BeamGeometry, AnnulusGeometry> geometry_;
};

/// Uniform nx-by-ny cell midpoints on [0, L] x [0, h]; sets right_end, left_end.
Domain sample_beam(double length, double height, int nx, int ny);

/**
 * Midpoint grid on r in [r_i, r_o], theta in [0, span]; sets outer_surface,
 * inner_surface, edge_start (theta = 0) and edge_end (theta = span).
 */
Domain sample_annulus(double r_inner, double r_outer, double theta_span, int nr, int nt);

}  // namespace vdem::domain

#endif  // VDEM_DOMAIN_DOMAIN_HPP
