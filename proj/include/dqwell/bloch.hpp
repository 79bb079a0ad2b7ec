#pragma once

// Canonical density matrix of the ideal gas in the discrete well: the
// spectral sum, its normalization and trace, an independent imaginary-time
// propagation of the Bloch equation, and the continuum Gaussian kernel.

#include <Eigen/Dense>

#include "dqwell/lattice.hpp"
#include "dqwell/well_spectrum.hpp"

namespace dqwell {

struct ThermalState {
  double beta = 0.0;
  double k_B = 1.0;

  static ThermalState from_temperature(double T, double k_B);
  double temperature() const { return 1.0 / (beta * k_B); }
  /// f = beta hbar^2 / (2 m* a^2)
  double thermal_variable(double energy_scale) const noexcept { return beta * energy_scale; }
};

/// rho(n, n'; beta) on the full (N+1) x (N+1) site grid, units 1/length.
struct DensityMatrix {
  Eigen::MatrixXd rho;
  LatticeSpec lattice;
  double beta = 0.0;
  bool normalized = false;

  double operator()(long n, long n_prime) const { return rho(n, n_prime); }
  /// Rows/columns 1..N-1.
  Eigen::MatrixXd interior() const;
};

/// (2/L) sum_{n_E=1}^{N-1} e^{-beta E} sin(pi n_E n/N) sin(pi n_E n'/N).
/// Every mode carries the weight 2/L, including n_E = N/2.
DensityMatrix density_matrix_spectral(const Spectrum& spectrum, double beta);

/// A single entry of the spectral density matrix, without building the grid.
double density_matrix_element(const Spectrum& spectrum, double beta, long n, long n_prime);

/// rho / Z.
DensityMatrix density_matrix_normalized(const DensityMatrix& dm, double Z);

/// Discrete integral of the diagonal over [0, N]. Equals Z_d for odd N and
/// Z_d + e^{-beta E_{N/2}} for even N (the n_E = N/2 mode integrates to 2).
double trace_integral(const DensityMatrix& dm);

/// One quarter of the two-step second difference along the first index,
/// applied to every column of an interior block, with the odd-reflection
/// ghost closure. This is -M R for the interior Hamiltonian M.
Eigen::MatrixXd apply_bloch_stencil(const Eigen::MatrixXd& interior);

/// Default step count: max(1000, ceil(1000 f_target)).
long default_bloch_steps(double f_target);

/// Classical RK4 integration of d rho/df = stencil(rho) from f = 0 to
/// f_target for an arbitrary interior initial block.
Eigen::MatrixXd propagate_bloch_interior(const Eigen::MatrixXd& initial, double f_target, long steps);

/// Solves the discretized Bloch equation from rho(0) = delta_{nn'}/a up to
/// beta_target. Throws DomainError if the step f_target/steps exceeds 1.
DensityMatrix propagate_bloch(const LatticeSpec& lattice, const ParticleSpec& particle,
                              double beta_target, long steps);
DensityMatrix propagate_bloch(const LatticeSpec& lattice, const ParticleSpec& particle,
                              double beta_target);

/// Free-particle kernel sqrt(m*/(2 pi beta hbar^2)) exp(-m* (x-x')^2 / (2 beta hbar^2)).
double density_matrix_continuum(double x, double x_prime, double beta, const ParticleSpec& particle);

/// Gaussian kernel divided by Z_c = L sqrt(m*/(2 pi beta hbar^2)).
double density_matrix_continuum_normalized(double x, double x_prime, double beta, double L,
                                           const ParticleSpec& particle);

}  // namespace dqwell
