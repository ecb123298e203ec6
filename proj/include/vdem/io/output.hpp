#ifndef VDEM_IO_OUTPUT_HPP
#define VDEM_IO_OUTPUT_HPP

#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "vdem/domain/domain.hpp"
#include "vdem/field/neural_field.hpp"
#include "vdem/solver/simulation.hpp"

namespace vdem::io {

/// Shortest round-trip decimal form.
std::string format_double(double v);

/**
 * Field CSV columns. Cartesian: x,y,u_x,u_y,sigma_xx,sigma_yy,sigma_xy,sigma_zz.
 * Cylindrical: r,theta,u_r,u_theta,sigma_rr,sigma_tt,sigma_rt,sigma_zz.
 * Growth adds g_r,g_theta.
 */
std::vector<std::string> field_columns(kinematics::CoordinateSystem cs, bool growth);

void write_field_csv(std::ostream& os, const domain::Domain& d, const solver::Snapshot& s);
/// Boundary samples: set,c0,c1,u0,u1.
void write_surface_csv(std::ostream& os, const solver::Snapshot& s);
/// Legacy ASCII VTK point cloud in Cartesian positions with displacement and stress point data.
void write_vtk(std::ostream& os, const domain::Domain& d, const solver::Snapshot& s, const std::string& title);

/// Loss history rows: step,time,iteration,energy.
void write_loss_header(std::ostream& os);
void write_loss_rows(std::ostream& os, const solver::LossRecord& r);

/// Per-step summary rows.
void write_summary_header(std::ostream& os);
void write_summary_row(std::ostream& os, const solver::LossRecord& r);

struct WriterOptions {
  bool fields = true;
  bool vtk = true;
  bool params = true;
};

/// Streams one run's outputs into a directory as steps complete.
class RunWriter {
 public:
  RunWriter(std::filesystem::path dir, std::string title, WriterOptions opt);

  void write_domain(const domain::Domain& d);
  void write_config(const std::string& text);
  void on_step(const domain::Domain& d, const field::NeuralField& f, const solver::Snapshot& s,
               const solver::LossRecord& r);

  const std::filesystem::path& dir() const noexcept { return dir_; }

 private:
  std::filesystem::path step_file(const std::string& stem, int step, const std::string& ext) const;

  std::filesystem::path dir_;
  std::string title_;
  WriterOptions opt_;
  std::ofstream loss_;
  std::ofstream summary_;
};

}  // namespace vdem::io

#endif  // VDEM_IO_OUTPUT_HPP
