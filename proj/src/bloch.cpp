#include "dqwell/bloch.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dqwell/discrete_calculus.hpp"

namespace dqwell {

ThermalState ThermalState::from_temperature(double T, double k_B) {
  if (!(T > 0.0)) throw DomainError("thermal state: temperature must be positive");
  if (!(k_B > 0.0)) throw DomainError("thermal state: k_B must be positive");
  return {1.0 / (k_B * T), k_B};
}

Eigen::MatrixXd DensityMatrix::interior() const {
  const long dim = lattice.N() - 1;
  return rho.block(1, 1, dim, dim);
}

DensityMatrix density_matrix_spectral(const Spectrum& spectrum, double beta) {
  if (!(beta >= 0.0)) throw DomainError("density_matrix_spectral: beta must be >= 0");
  const LatticeSpec& lattice = spectrum.lattice;
  const long N = lattice.N();
  const long modes = N - 1;

  Eigen::MatrixXd sines(N + 1, modes);
  Eigen::VectorXd weights(modes);
  for (long j = 0; j < modes; ++j) {
    const SpectralMode& mode = spectrum.modes[static_cast<std::size_t>(j)];
    weights[j] = std::exp(-beta * mode.energy);
    for (long n = 0; n <= N; ++n) sines(n, j) = lattice_sine(mode.n_E * n, N);
  }

  Eigen::MatrixXd rho = (2.0 / lattice.L()) * (sines * weights.asDiagonal() * sines.transpose());
  rho = 0.5 * (rho + rho.transpose()).eval();
  return {std::move(rho), lattice, beta, false};
}

double density_matrix_element(const Spectrum& spectrum, double beta, long n, long n_prime) {
  if (!(beta >= 0.0)) throw DomainError("density_matrix_element: beta must be >= 0");
  const long N = spectrum.lattice.N();
  if (n < 0 || n > N || n_prime < 0 || n_prime > N)
    throw DomainError("density_matrix_element: site outside [0, N]");
  double sum = 0.0;
  for (const auto& mode : spectrum.modes)
    sum += std::exp(-beta * mode.energy) * lattice_sine(mode.n_E * n, N) *
           lattice_sine(mode.n_E * n_prime, N);
  return 2.0 / spectrum.lattice.L() * sum;
}

DensityMatrix density_matrix_normalized(const DensityMatrix& dm, double Z) {
  if (!(Z > 0.0)) throw DomainError("density_matrix_normalized: Z must be positive");
  return {dm.rho / Z, dm.lattice, dm.beta, true};
}

double trace_integral(const DensityMatrix& dm) {
  const LatticeFunctiond diagonal{Eigen::VectorXd(dm.rho.diagonal())};
  return definite_integral(diagonal, dm.lattice.a());
}

Eigen::MatrixXd apply_bloch_stencil(const Eigen::MatrixXd& interior) {
  const Eigen::Index dim = interior.rows();
  Eigen::MatrixXd out = -0.5 * interior;
  if (dim > 2) {
    out.topRows(dim - 2) += 0.25 * interior.bottomRows(dim - 2);
    out.bottomRows(dim - 2) += 0.25 * interior.topRows(dim - 2);
  }
  // ghosts: rho(-1) = -rho(1), rho(N+1) = -rho(N-1)
  out.row(0) -= 0.25 * interior.row(0);
  out.row(dim - 1) -= 0.25 * interior.row(dim - 1);
  return out;
}

long default_bloch_steps(double f_target) {
  return std::max(1000L, static_cast<long>(std::ceil(1000.0 * f_target)));
}

Eigen::MatrixXd propagate_bloch_interior(const Eigen::MatrixXd& initial, double f_target, long steps) {
  if (!(f_target >= 0.0)) throw DomainError("propagate_bloch: thermal variable must be >= 0");
  if (steps < 1) throw DomainError("propagate_bloch: steps must be >= 1");
  const double h = f_target / static_cast<double>(steps);
  if (h > 1.0)
    throw DomainError("propagate_bloch: step " + std::to_string(h) +
                      " exceeds the stability bound 1; increase steps");
  Eigen::MatrixXd rho = initial;
  if (f_target == 0.0) return rho;
  for (long s = 0; s < steps; ++s) {
    const Eigen::MatrixXd k1 = apply_bloch_stencil(rho);
    const Eigen::MatrixXd k2 = apply_bloch_stencil(rho + 0.5 * h * k1);
    const Eigen::MatrixXd k3 = apply_bloch_stencil(rho + 0.5 * h * k2);
    const Eigen::MatrixXd k4 = apply_bloch_stencil(rho + h * k3);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return rho;
}

DensityMatrix propagate_bloch(const LatticeSpec& lattice, const ParticleSpec& particle,
                              double beta_target, long steps) {
  if (!(beta_target >= 0.0)) throw DomainError("propagate_bloch: beta must be >= 0");
  const long N = lattice.N();
  const long dim = N - 1;
  const double f_target = beta_target * particle.energy_scale(lattice.a());
  const Eigen::MatrixXd initial = Eigen::MatrixXd::Identity(dim, dim) / lattice.a();

  Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(N + 1, N + 1);
  rho.block(1, 1, dim, dim) = propagate_bloch_interior(initial, f_target, steps);
  return {std::move(rho), lattice, beta_target, false};
}

DensityMatrix propagate_bloch(const LatticeSpec& lattice, const ParticleSpec& particle,
                              double beta_target) {
  const double f_target = beta_target * particle.energy_scale(lattice.a());
  return propagate_bloch(lattice, particle, beta_target, default_bloch_steps(f_target));
}

double density_matrix_continuum(double x, double x_prime, double beta, const ParticleSpec& particle) {
  if (!(beta > 0.0)) throw DomainError("density_matrix_continuum: beta must be positive");
  const double scale = particle.m_star / (beta * particle.hbar * particle.hbar);
  const double d = x - x_prime;
  return std::sqrt(scale / (2.0 * std::numbers::pi)) * std::exp(-0.5 * scale * d * d);
}

double density_matrix_continuum_normalized(double x, double x_prime, double beta, double L,
                                           const ParticleSpec& particle) {
  if (!(L > 0.0)) throw DomainError("density_matrix_continuum_normalized: L must be positive");
  if (!(beta > 0.0)) throw DomainError("density_matrix_continuum_normalized: beta must be positive");
  const double scale = particle.m_star / (beta * particle.hbar * particle.hbar);
  const double d = x - x_prime;
  return std::exp(-0.5 * scale * d * d) / L;
}

}  // namespace dqwell
