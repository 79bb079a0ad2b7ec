#include "dqwell/well_spectrum.hpp"

#include <cmath>
#include <numbers>

namespace dqwell {

namespace {

void require_mode(long n_E, long N, const char* what) {
  if (n_E < 1 || n_E > N - 1)
    throw DomainError(std::string(what) + ": n_E = " + std::to_string(n_E) + " outside [1, " +
                      std::to_string(N - 1) + "]");
}

}  // namespace

double lattice_sine(long k, long N) {
  const long period = 2 * N;
  long r = k % period;
  if (r < 0) r += period;
  double sign = 1.0;
  if (r >= N) {
    r -= N;
    sign = -1.0;
  }
  if (2 * r > N) r = N - r;
  return sign * std::sin(std::numbers::pi * static_cast<double>(r) / static_cast<double>(N));
}

const SpectralMode& Spectrum::mode(long n_E) const {
  require_mode(n_E, lattice.N(), "Spectrum::mode");
  return modes[static_cast<std::size_t>(n_E - 1)];
}

double dimensionless_energy(long n_E, long N) {
  require_mode(n_E, N, "dimensionless_energy");
  const double s = lattice_sine(n_E, N);
  return s * s;
}

double energy_discrete(long n_E, const LatticeSpec& lattice, const ParticleSpec& particle) {
  return particle.energy_scale(lattice.a()) * dimensionless_energy(n_E, lattice.N());
}

double energy_continuum(long n_E, double L, const ParticleSpec& particle) {
  if (n_E < 1) throw DomainError("energy_continuum: n_E must be >= 1");
  if (!(L > 0.0)) throw DomainError("energy_continuum: L must be positive");
  const double k = std::numbers::pi * static_cast<double>(n_E) / L;
  return particle.hbar * particle.hbar * k * k / (2.0 * particle.m_star);
}

double normalization_constant(long n_E, const LatticeSpec& lattice) {
  require_mode(n_E, lattice.N(), "normalization_constant");
  // sin^2(pi n / 2) is 1 on every odd site, so the odd-site quadrature gives
  // a N instead of a N / 2 for this mode.
  if (lattice.N() % 2 == 0 && 2 * n_E == lattice.N()) return 1.0 / std::sqrt(lattice.L());
  return std::sqrt(2.0 / lattice.L());
}

Spectrum make_spectrum(const LatticeSpec& lattice, const ParticleSpec& particle) {
  Spectrum spectrum{lattice, particle, {}};
  const long N = lattice.N();
  const double eps0 = particle.energy_scale(lattice.a());
  spectrum.modes.reserve(static_cast<std::size_t>(N - 1));
  for (long n_E = 1; n_E <= N - 1; ++n_E) {
    const double e = dimensionless_energy(n_E, N);
    spectrum.modes.push_back({n_E, e, eps0 * e, normalization_constant(n_E, lattice)});
  }
  return spectrum;
}

LatticeFunctiond eigenfunction(const SpectralMode& mode, const LatticeSpec& lattice) {
  const long N = lattice.N();
  require_mode(mode.n_E, N, "eigenfunction");
  return LatticeFunctiond::sample(
      N, [&](long n) { return mode.norm_const * lattice_sine(mode.n_E * n, N); });
}

double continuum_limit_error(long n_E, long N) {
  require_mode(n_E, N, "continuum_limit_error");
  const double x = std::numbers::pi * static_cast<double>(n_E) / static_cast<double>(N);
  if (x < 1e-4) {
    // 1 - (sin x / x)^2 = x^2/3 - 2x^4/45 + ...
    const double x2 = x * x;
    return x2 / 3.0 - 2.0 * x2 * x2 / 45.0;
  }
  const double r = std::sin(x) / x;
  return 1.0 - r * r;
}

}  // namespace dqwell
