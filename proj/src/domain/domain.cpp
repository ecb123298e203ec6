#include "vdem/domain/domain.hpp"

#include <algorithm>
#include <limits>

#include "vdem/errors.hpp"

namespace vdem::domain {

Domain::Domain(std::vector<CollocationPoint> points, std::map<std::string, std::vector<BoundaryPoint>> boundaries,
               kinematics::CoordinateSystem coordinates, std::variant<BeamGeometry, AnnulusGeometry> geometry)
    : points_(std::move(points)),
      boundaries_(std::move(boundaries)),
      coordinates_(coordinates),
      geometry_(geometry) {}

const std::vector<BoundaryPoint>& Domain::boundary(const std::string& name) const {
  auto it = boundaries_.find(name);
  if (it == boundaries_.end()) throw DomainError("unknown boundary set '" + name + "'");
  return it->second;
}

double Domain::total_weight() const {
  double s = 0.0;
  for (const auto& p : points_) s += p.weight;
  return s;
}

double Domain::boundary_weight(const std::string& name) const {
  double s = 0.0;
  for (const auto& p : boundary(name)) s += p.weight;
  return s;
}

std::array<double, 4> Domain::bounds() const {
  if (const auto* beam = std::get_if<BeamGeometry>(&geometry_)) return {0.0, beam->length, 0.0, beam->height};
  const auto& ring = std::get<AnnulusGeometry>(geometry_);
  return {ring.r_inner, ring.r_outer, 0.0, ring.theta_span};
}

void Domain::write_csv(std::ostream& os) const {
  os.precision(17);
  os << "set,c0,c1,weight\n";
  for (const auto& p : points_) os << "interior," << p.x[0] << ',' << p.x[1] << ',' << p.weight << '\n';
  for (const auto& [name, set] : boundaries_)
    for (const auto& p : set) os << name << ',' << p.x[0] << ',' << p.x[1] << ',' << p.weight << '\n';
}

Domain sample_beam(double length, double height, int nx, int ny) {
  if (nx < 2 || ny < 2) throw DomainError("beam sampling needs nx, ny >= 2");
  if (!(length > 0.0) || !(height > 0.0)) throw DomainError("beam dimensions must be positive");
  const double dx = length / nx;
  const double dy = height / ny;
  std::vector<CollocationPoint> pts;
  pts.reserve(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny));
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) pts.push_back({{(i + 0.5) * dx, (j + 0.5) * dy}, dx * dy});

  std::map<std::string, std::vector<BoundaryPoint>> sets;
  for (int j = 0; j < ny; ++j) {
    sets["right_end"].push_back({{length, (j + 0.5) * dy}, dy, {1.0, 0.0}});
    sets["left_end"].push_back({{0.0, (j + 0.5) * dy}, dy, {-1.0, 0.0}});
  }
  return Domain(std::move(pts), std::move(sets), kinematics::CoordinateSystem::Cartesian,
                BeamGeometry{length, height});
}

Domain sample_annulus(double r_inner, double r_outer, double theta_span, int nr, int nt) {
  if (!(r_inner > 0.0)) throw DomainError("annulus inner radius must be positive");
  if (!(r_outer > r_inner)) throw DomainError("annulus needs r_inner < r_outer");
  if (!(theta_span > 0.0)) throw DomainError("annulus angular span must be positive");
  if (nr < 2 || nt < 2) throw DomainError("annulus sampling needs nr, nt >= 2");
  const double dr = (r_outer - r_inner) / nr;
  const double dth = theta_span / nt;
  std::vector<CollocationPoint> pts;
  pts.reserve(static_cast<std::size_t>(nr) * static_cast<std::size_t>(nt));
  for (int j = 0; j < nt; ++j)
    for (int i = 0; i < nr; ++i) {
      const double r = r_inner + (i + 0.5) * dr;
      pts.push_back({{r, (j + 0.5) * dth}, r * dr * dth});
    }

  std::map<std::string, std::vector<BoundaryPoint>> sets;
  for (int j = 0; j < nt; ++j) {
    const double th = (j + 0.5) * dth;
    sets["outer_surface"].push_back({{r_outer, th}, r_outer * dth, {1.0, 0.0}});
    sets["inner_surface"].push_back({{r_inner, th}, r_inner * dth, {-1.0, 0.0}});
  }
  for (int i = 0; i < nr; ++i) {
    const double r = r_inner + (i + 0.5) * dr;
    sets["edge_start"].push_back({{r, 0.0}, dr, {0.0, -1.0}});
    sets["edge_end"].push_back({{r, theta_span}, dr, {0.0, 1.0}});
  }
  return Domain(std::move(pts), std::move(sets), kinematics::CoordinateSystem::Cylindrical,
                AnnulusGeometry{r_inner, r_outer, theta_span});
}

}  // namespace vdem::domain
