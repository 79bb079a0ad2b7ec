#pragma once

// Discrete infinite square well: closed-form spectrum and eigenfunctions,
// the interior Hamiltonian matrix, and continuum-limit comparisons.

#include <Eigen/Dense>

#include <algorithm>
#include <string>
#include <vector>

#include "dqwell/errors.hpp"
#include "dqwell/lattice.hpp"

namespace dqwell {

struct SpectralMode {
  long n_E = 0;
  double e_tilde = 0.0;     // sin^2(pi n_E / N)
  double energy = 0.0;      // eps0 * e_tilde
  double norm_const = 0.0;  // sqrt(2/L); 1/sqrt(L) for n_E = N/2
};

/// The N-1 independent modes n_E = 1..N-1 of one lattice and particle.
struct Spectrum {
  LatticeSpec lattice;
  ParticleSpec particle;
  std::vector<SpectralMode> modes;

  double energy_scale() const noexcept { return particle.energy_scale(lattice.a()); }
  const SpectralMode& mode(long n_E) const;
};

Spectrum make_spectrum(const LatticeSpec& lattice, const ParticleSpec& particle);

/// sin^2(pi n_E / N), evaluated through min(n_E, N - n_E) so the
/// n_E <-> N - n_E degeneracy is bit-exact.
double dimensionless_energy(long n_E, long N);

/// sin(pi k / N) with k reduced modulo 2N and folded into [0, N/2], so that
/// sin(pi k) is exactly zero and sin(pi (N-k)/N) == sin(pi k/N) bit for bit.
double lattice_sine(long k, long N);

/// eps0 sin^2(pi n_E / N); n_E must lie in [1, N-1].
double energy_discrete(long n_E, const LatticeSpec& lattice, const ParticleSpec& particle);

/// hbar^2 pi^2 n_E^2 / (2 m* L^2).
double energy_continuum(long n_E, double L, const ParticleSpec& particle);

double normalization_constant(long n_E, const LatticeSpec& lattice);

/// Psi(n) = norm_const sin(pi n_E n / N) on sites 0..N.
LatticeFunctiond eigenfunction(const SpectralMode& mode, const LatticeSpec& lattice);

/// |E_d / E_c - 1| = 1 - (sin x / x)^2, x = pi n_E / N.
double continuum_limit_error(long n_E, long N);

/// Dimensionless interior Hamiltonian on sites 1..N-1: minus one quarter of
/// the two-step second difference, with the out-of-well neighbours of rows 1
/// and N-1 closed by odd reflection (Psi(-1) = -Psi(1), Psi(N+1) = -Psi(N-1)).
/// Its eigenvalues are exactly sin^2(pi n_E / N).
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> build_hamiltonian_matrix(long N) {
  if (N < 2) throw DomainError("build_hamiltonian_matrix: N must be >= 2");
  const long dim = N - 1;
  const Scalar quarter = Scalar(1) / Scalar(4);
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> M =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(dim, dim);
  for (long i = 0; i < dim; ++i) {
    M(i, i) = Scalar(2) * quarter;
    if (i + 2 < dim) {
      M(i, i + 2) = -quarter;
      M(i + 2, i) = -quarter;
    }
  }
  // ghost fold-back; for N = 2 both land on the single site
  M(0, 0) += quarter;
  M(dim - 1, dim - 1) += quarter;
  return M;
}

template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> build_hamiltonian_matrix(
    const LatticeSpec& lattice) {
  return build_hamiltonian_matrix<Scalar>(lattice.N());
}

inline constexpr double kSymmetryTolerance = 1e-12;

/// Ascending eigenvalues of a symmetric matrix.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> numeric_spectrum(
    const Eigen::MatrixBase<Derived>& M) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (M.rows() != M.cols()) throw DomainError("numeric_spectrum: matrix is not square");
  const Matrix dense = M;
  const Scalar asym = (dense - dense.transpose()).cwiseAbs().maxCoeff();
  if (asym > Scalar(kSymmetryTolerance))
    throw DomainError("numeric_spectrum: matrix is not symmetric (max asymmetry " +
                      std::to_string(static_cast<double>(asym)) + ")");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(dense, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericError("numeric_spectrum: eigensolver failed");
  return solver.eigenvalues();  // already ascending
}

}  // namespace dqwell
