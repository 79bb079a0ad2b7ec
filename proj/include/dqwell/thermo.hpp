#pragma once

// Partition functions and derived thermodynamics of the ideal gas in the
// well, discrete and continuum, plus the two-level heat-capacity model.

#include <optional>

#include "dqwell/lattice.hpp"
#include "dqwell/well_spectrum.hpp"

namespace dqwell {

enum class PartitionMethod { discrete_sum, continuum_sum, continuum_closed, theta };

const char* to_string(PartitionMethod method);

struct PartitionResult {
  double Z = 0.0;
  PartitionMethod method = PartitionMethod::discrete_sum;
  double beta = 0.0;
  double free_energy = 0.0;  // NaN at beta = 0
  std::optional<double> mu;  // beta hbar^2 pi^2 / (2 m* L^2) for continuum methods
};

/// Series stop once the next term drops below this fraction of the sum.
inline constexpr double kSeriesRelativeTolerance = 1e-16;
inline constexpr long kSeriesTermCap = 1'000'000;

/// beta hbar^2 pi^2 / (2 m* L^2)
double continuum_mu(double L, const ParticleSpec& particle, double beta);

/// sum_{n_E=1}^{N-1} exp(-beta E_n).
PartitionResult partition_discrete(const Spectrum& spectrum, double beta);

/// sum_{n_E>=1} exp(-mu n_E^2), truncated automatically or at `cutoff` terms.
PartitionResult partition_continuum_sum(double L, const ParticleSpec& particle, double beta,
                                        std::optional<long> cutoff = std::nullopt);

/// L sqrt(m* / (2 pi beta hbar^2)) = sqrt(pi/mu) / 2.
PartitionResult partition_continuum_closed(double L, const ParticleSpec& particle, double beta);

/// theta_3(mu) = sum over all integers of exp(-mu n^2), by the direct sum.
double theta3(double mu);
/// Same function through its Poisson-resummed form sqrt(pi/mu) sum exp(-pi^2 n^2/mu).
double theta3_poisson(double mu);

/// (theta_3(mu) - 1) / 2.
PartitionResult partition_theta(double L, const ParticleSpec& particle, double beta);

/// F = -ln Z / beta.
double free_energy(const PartitionResult& Z);

enum class ZeroBeta { reject, unweighted_mean };

/// Thermal mean of the discrete spectrum, -d ln Z_d / d beta. With
/// ZeroBeta::unweighted_mean, beta = 0 returns the plain spectral average.
double mean_energy(const Spectrum& spectrum, double beta, ZeroBeta zero_beta = ZeroBeta::reject);

/// -d ln Z_c / d beta for the continuum well sum.
double mean_energy_continuum_sum(double L, const ParticleSpec& particle, double beta);

/// -d ln theta_3(mu(beta)) / d beta; equals 1/(2 beta) up to O(exp(-pi^2/mu)).
double mean_energy_theta(double L, const ParticleSpec& particle, double beta);

/// -d ln Z_closed / d beta = 1 / (2 beta).
double mean_energy_continuum_closed(double beta);

struct TwoLevelModel {
  double E1 = 0.0;
  double E2 = 0.0;
  double delta_E = 0.0;      // E1 - E2 (negative)
  double theta_char = 0.0;   // |delta_E| / (2 k_B)
};

TwoLevelModel make_two_level(const Spectrum& spectrum);

/// exp(-beta E1) + exp(-beta E2); needs N >= 5.
double two_level_partition(const Spectrum& spectrum, double beta);

/// C_V / R = (x / cosh x)^2 with x = |E2 - E1| / (2 k_B T).
double heat_capacity_two_level(const Spectrum& spectrum, double T);

/// The same curve as a function of x = Theta / T.
double heat_capacity_two_level_x(double x);

/// Theta = |E1 - E2| / (2 k_B).
double characteristic_temperature(const Spectrum& spectrum);

struct HeatCapacityPeak {
  double T = 0.0;
  double x = 0.0;
  double cv_over_R = 0.0;
};

/// Maximum of the two-level heat capacity inside [T_lo, T_hi], by golden
/// section in log T.
HeatCapacityPeak heat_capacity_peak(const Spectrum& spectrum, double T_lo, double T_hi);

}  // namespace dqwell
