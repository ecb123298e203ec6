#ifndef VDEM_SOLVER_DIAGNOSTICS_HPP
#define VDEM_SOLVER_DIAGNOSTICS_HPP

#include <span>
#include <string>
#include <vector>

#include "vdem/domain/domain.hpp"
#include "vdem/field/neural_field.hpp"
#include "vdem/solver/simulation.hpp"

namespace vdem::solver {

/// Mean sigma_00 over points with lo < x0 < hi.
double band_mean_stress(const domain::Domain& d, const Snapshot& s, double lo, double hi);

/// Displacement at the beam tip (L, h/2).
std::array<double, 2> tip_displacement(const field::NeuralField& f, double length, double height);

/**
 * Least-squares fit of u_y(x, h/2) to A (1 - cos(pi x / 2L)) on n samples.
 * Returns {A, R^2}.
 */
std::array<double, 2> euler_mode_fit(const field::NeuralField& f, double length, double height, int n = 101);

/**
 * Cosine-series amplitudes a_k of v(theta) on [0, span] in the basis
 * cos(k pi theta / span), from midpoint samples. a_0 is the mean.
 */
std::vector<double> cosine_modes(std::span<const double> theta, std::span<const double> v, double span, int kmax);

/// Largest |a_k| for k >= kmin.
double dominant_mode_amplitude(const std::vector<double>& a, int kmin);

/// std/|mean| of a sample.
double relative_spread(std::span<const double> v);

/// Fraction of iterations whose energy exceeds the previous one.
double increase_fraction(std::span<const double> energy);

/// Boundary-set samples split into the angle and one displacement component.
void surface_component(const Snapshot& s, const std::string& set, int component, std::vector<double>& theta,
                       std::vector<double>& value);

}  // namespace vdem::solver

#endif  // VDEM_SOLVER_DIAGNOSTICS_HPP
