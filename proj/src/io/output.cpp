#include "vdem/io/output.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "vdem/errors.hpp"

namespace vdem::io {

std::string format_double(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::vector<std::string> field_columns(kinematics::CoordinateSystem cs, bool growth) {
  std::vector<std::string> c =
      cs == kinematics::CoordinateSystem::Cartesian
          ? std::vector<std::string>{"x", "y", "u_x", "u_y", "sigma_xx", "sigma_yy", "sigma_xy", "sigma_zz"}
          : std::vector<std::string>{"r", "theta", "u_r", "u_theta", "sigma_rr", "sigma_tt", "sigma_rt", "sigma_zz"};
  if (growth) {
    c.push_back("g_r");
    c.push_back("g_theta");
  }
  return c;
}

void write_field_csv(std::ostream& os, const domain::Domain& d, const solver::Snapshot& s) {
  const bool growth = !s.g_r.empty();
  const auto cols = field_columns(d.coordinates(), growth);
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << '\n';
  const auto& pts = d.points();
  if (s.u.size() != pts.size()) throw DomainError("snapshot does not match the domain");
  for (std::size_t p = 0; p < pts.size(); ++p) {
    os << format_double(pts[p].x[0]) << ',' << format_double(pts[p].x[1]) << ',' << format_double(s.u[p][0]) << ','
       << format_double(s.u[p][1]);
    for (double v : s.sigma[p]) os << ',' << format_double(v);
    if (growth) os << ',' << format_double(s.g_r[p]) << ',' << format_double(s.g_theta[p]);
    os << '\n';
  }
}

void write_surface_csv(std::ostream& os, const solver::Snapshot& s) {
  os << "set,c0,c1,u0,u1\n";
  for (const auto& [name, ss] : s.surfaces)
    for (std::size_t i = 0; i < ss.x.size(); ++i)
      os << name << ',' << format_double(ss.x[i][0]) << ',' << format_double(ss.x[i][1]) << ','
         << format_double(ss.u[i][0]) << ',' << format_double(ss.u[i][1]) << '\n';
}

void write_vtk(std::ostream& os, const domain::Domain& d, const solver::Snapshot& s, const std::string& title) {
  const auto& pts = d.points();
  const std::size_t n = pts.size();
  const bool polar = d.coordinates() == kinematics::CoordinateSystem::Cylindrical;
  os << "# vtk DataFile Version 3.0\n" << title << " t=" << format_double(s.time) << "\nASCII\nDATASET POLYDATA\n";
  os << "POINTS " << n << " double\n";
  std::vector<std::array<double, 2>> ucart(n);
  for (std::size_t p = 0; p < n; ++p) {
    double x = pts[p].x[0], y = pts[p].x[1];
    ucart[p] = s.u[p];
    if (polar) {
      const double c = std::cos(pts[p].x[1]), sn = std::sin(pts[p].x[1]);
      x = pts[p].x[0] * c;
      y = pts[p].x[0] * sn;
      ucart[p] = {c * s.u[p][0] - sn * s.u[p][1], sn * s.u[p][0] + c * s.u[p][1]};
    }
    os << format_double(x) << ' ' << format_double(y) << " 0\n";
  }
  os << "VERTICES " << n << ' ' << 2 * n << '\n';
  for (std::size_t p = 0; p < n; ++p) os << "1 " << p << '\n';
  os << "POINT_DATA " << n << "\nVECTORS displacement double\n";
  for (const auto& u : ucart) os << format_double(u[0]) << ' ' << format_double(u[1]) << " 0\n";
  const auto cols = field_columns(d.coordinates(), !s.g_r.empty());
  for (std::size_t k = 0; k < 4; ++k) {
    os << "SCALARS " << cols[4 + k] << " double 1\nLOOKUP_TABLE default\n";
    for (std::size_t p = 0; p < n; ++p) os << format_double(s.sigma[p][k]) << '\n';
  }
  if (!s.g_r.empty()) {
    os << "SCALARS g_r double 1\nLOOKUP_TABLE default\n";
    for (double g : s.g_r) os << format_double(g) << '\n';
    os << "SCALARS g_theta double 1\nLOOKUP_TABLE default\n";
    for (double g : s.g_theta) os << format_double(g) << '\n';
  }
}

void write_loss_header(std::ostream& os) { os << "step,time,iteration,energy\n"; }

void write_loss_rows(std::ostream& os, const solver::LossRecord& r) {
  for (std::size_t k = 0; k < r.energy.size(); ++k)
    os << r.step << ',' << format_double(r.time) << ',' << k << ',' << format_double(r.energy[k]) << '\n';
}

void write_summary_header(std::ostream& os) {
  os << "step,time,energy,strain,growth,external,max_displacement,wall_seconds,final_learning_rate,guard_triggers\n";
}

void write_summary_row(std::ostream& os, const solver::LossRecord& r) {
  os << r.step << ',' << format_double(r.time) << ',' << format_double(r.converged) << ','
     << format_double(r.terms.strain) << ',' << format_double(r.terms.growth) << ',' << format_double(r.terms.external)
     << ',' << format_double(r.max_displacement) << ',' << format_double(r.wall_seconds) << ','
     << format_double(r.final_learning_rate) << ',' << r.guard_triggers << '\n';
}

RunWriter::RunWriter(std::filesystem::path dir, std::string title, WriterOptions opt)
    : dir_(std::move(dir)), title_(std::move(title)), opt_(opt) {
  std::filesystem::create_directories(dir_);
  loss_.open(dir_ / "loss_history.csv");
  summary_.open(dir_ / "steps.csv");
  if (!loss_ || !summary_) throw Error("cannot write outputs under " + dir_.string());
  write_loss_header(loss_);
  write_summary_header(summary_);
}

std::filesystem::path RunWriter::step_file(const std::string& stem, int step, const std::string& ext) const {
  char buf[32];
  std::snprintf(buf, sizeof buf, "_step%04d", step);
  return dir_ / (stem + buf + ext);
}

void RunWriter::write_domain(const domain::Domain& d) {
  std::ofstream os(dir_ / "domain.csv");
  d.write_csv(os);
}

void RunWriter::write_config(const std::string& text) {
  std::ofstream os(dir_ / "config.cfg");
  os << text;
}

void RunWriter::on_step(const domain::Domain& d, const field::NeuralField& f, const solver::Snapshot& s,
                        const solver::LossRecord& r) {
  write_loss_rows(loss_, r);
  write_summary_row(summary_, r);
  loss_.flush();
  summary_.flush();
  if (opt_.fields) {
    std::ofstream fc(step_file("fields", s.step, ".csv"));
    write_field_csv(fc, d, s);
    std::ofstream sc(step_file("surfaces", s.step, ".csv"));
    write_surface_csv(sc, s);
  }
  if (opt_.vtk) {
    std::ofstream vt(step_file("fields", s.step, ".vtk"));
    write_vtk(vt, d, s, title_);
  }
  if (opt_.params) {
    std::ofstream pp(step_file("params", s.step, ".txt"));
    f.write_params(pp);
  }
}

}  // namespace vdem::io
