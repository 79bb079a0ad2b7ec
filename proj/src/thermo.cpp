#include "dqwell/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace dqwell {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive_beta(double beta, const char* what) {
  if (!(beta > 0.0)) throw DomainError(std::string(what) + ": beta must be positive");
}

// Shifted Gaussian lattice sums over n >= 1:
//   s0 = sum exp(-mu (n^2 - 1)),  s2 = sum n^2 exp(-mu (n^2 - 1)).
// The common factor exp(-mu) is left out so large mu does not underflow.
struct GaussianSums {
  double s0 = 0.0;
  double s2 = 0.0;
  long terms = 0;
};

GaussianSums gaussian_lattice_sums(double mu, std::optional<long> cutoff = std::nullopt) {
  GaussianSums sums;
  const double turn = 1.0 / std::sqrt(mu);  // n^2 exp(-mu n^2) peaks near here
  for (long n = 1;; ++n) {
    const double nn = static_cast<double>(n);
    const double term = std::exp(-mu * (nn * nn - 1.0));
    sums.s0 += term;
    sums.s2 += nn * nn * term;
    sums.terms = n;
    if (cutoff) {
      if (n >= *cutoff) break;
      continue;
    }
    const double next_n = nn + 1.0;
    const double next = std::exp(-mu * (next_n * next_n - 1.0));
    if (nn > turn && next < kSeriesRelativeTolerance * sums.s0 &&
        next_n * next_n * next < kSeriesRelativeTolerance * sums.s2)
      break;
    if (n >= kSeriesTermCap)
      throw NumericError("Gaussian lattice sum did not converge within " +
                         std::to_string(kSeriesTermCap) + " terms (mu = " + std::to_string(mu) + ")");
  }
  return sums;
}

PartitionResult continuum_result(double Z, double log_Z, PartitionMethod method, double beta,
                                 double mu) {
  return {Z, method, beta, -log_Z / beta, mu};
}

}  // namespace

const char* to_string(PartitionMethod method) {
  switch (method) {
    case PartitionMethod::discrete_sum:
      return "discrete_sum";
    case PartitionMethod::continuum_sum:
      return "continuum_sum";
    case PartitionMethod::continuum_closed:
      return "continuum_closed";
    case PartitionMethod::theta:
      return "theta";
  }
  return "unknown";
}

double continuum_mu(double L, const ParticleSpec& particle, double beta) {
  if (!(L > 0.0)) throw DomainError("continuum_mu: L must be positive");
  return beta * particle.hbar * particle.hbar * kPi * kPi / (2.0 * particle.m_star * L * L);
}

PartitionResult partition_discrete(const Spectrum& spectrum, double beta) {
  if (!(beta >= 0.0)) throw DomainError("partition_discrete: beta must be >= 0");
  double e_min = std::numeric_limits<double>::infinity();
  for (const auto& mode : spectrum.modes) e_min = std::min(e_min, mode.energy);
  double shifted = 0.0;
  for (const auto& mode : spectrum.modes) shifted += std::exp(-beta * (mode.energy - e_min));
  const double Z = std::exp(-beta * e_min) * shifted;
  const double F = beta > 0.0 ? e_min - std::log(shifted) / beta
                              : std::numeric_limits<double>::quiet_NaN();
  return {Z, PartitionMethod::discrete_sum, beta, F, std::nullopt};
}

PartitionResult partition_continuum_sum(double L, const ParticleSpec& particle, double beta,
                                        std::optional<long> cutoff) {
  require_positive_beta(beta, "partition_continuum_sum");
  if (cutoff && *cutoff < 1) throw DomainError("partition_continuum_sum: cutoff must be >= 1");
  const double mu = continuum_mu(L, particle, beta);
  const GaussianSums sums = gaussian_lattice_sums(mu, cutoff);
  return continuum_result(std::exp(-mu) * sums.s0, -mu + std::log(sums.s0),
                          PartitionMethod::continuum_sum, beta, mu);
}

PartitionResult partition_continuum_closed(double L, const ParticleSpec& particle, double beta) {
  require_positive_beta(beta, "partition_continuum_closed");
  const double mu = continuum_mu(L, particle, beta);
  const double Z = L * std::sqrt(particle.m_star / (2.0 * kPi * beta * particle.hbar * particle.hbar));
  return continuum_result(Z, std::log(Z), PartitionMethod::continuum_closed, beta, mu);
}

double theta3(double mu) {
  if (!(mu > 0.0)) throw DomainError("theta3: mu must be positive");
  const GaussianSums sums = gaussian_lattice_sums(mu);
  return 1.0 + 2.0 * std::exp(-mu) * sums.s0;
}

double theta3_poisson(double mu) {
  if (!(mu > 0.0)) throw DomainError("theta3_poisson: mu must be positive");
  const double dual = kPi * kPi / mu;
  const GaussianSums sums = gaussian_lattice_sums(dual);
  return std::sqrt(kPi / mu) * (1.0 + 2.0 * std::exp(-dual) * sums.s0);
}

PartitionResult partition_theta(double L, const ParticleSpec& particle, double beta) {
  require_positive_beta(beta, "partition_theta");
  const double mu = continuum_mu(L, particle, beta);
  // the resummed series converges faster below mu = pi; above it the
  // direct series avoids the cancellation in theta - 1
  const double Z = mu < kPi ? 0.5 * (theta3_poisson(mu) - 1.0) : 0.5 * (theta3(mu) - 1.0);
  return continuum_result(Z, std::log(Z), PartitionMethod::theta, beta, mu);
}

double free_energy(const PartitionResult& Z) {
  require_positive_beta(Z.beta, "free_energy");
  if (!(Z.Z > 0.0)) throw DomainError("free_energy: Z must be positive");
  return -std::log(Z.Z) / Z.beta;
}

double mean_energy(const Spectrum& spectrum, double beta, ZeroBeta zero_beta) {
  if (beta == 0.0 && zero_beta == ZeroBeta::unweighted_mean) {
    double total = 0.0;
    for (const auto& mode : spectrum.modes) total += mode.energy;
    return total / static_cast<double>(spectrum.modes.size());
  }
  require_positive_beta(beta, "mean_energy");
  double e_min = std::numeric_limits<double>::infinity();
  for (const auto& mode : spectrum.modes) e_min = std::min(e_min, mode.energy);
  double weight_sum = 0.0;
  double energy_sum = 0.0;
  for (const auto& mode : spectrum.modes) {
    const double w = std::exp(-beta * (mode.energy - e_min));
    weight_sum += w;
    energy_sum += w * mode.energy;
  }
  return energy_sum / weight_sum;
}

double mean_energy_continuum_sum(double L, const ParticleSpec& particle, double beta) {
  require_positive_beta(beta, "mean_energy_continuum_sum");
  const double mu = continuum_mu(L, particle, beta);
  const GaussianSums sums = gaussian_lattice_sums(mu);
  return (mu / beta) * sums.s2 / sums.s0;
}

double mean_energy_theta(double L, const ParticleSpec& particle, double beta) {
  require_positive_beta(beta, "mean_energy_theta");
  const double mu = continuum_mu(L, particle, beta);
  if (mu < kPi) {
    // ln theta = ln sqrt(pi/mu) + ln(1 + 2 sum exp(-d n^2)), d = pi^2/mu
    const double dual = kPi * kPi / mu;
    const GaussianSums sums = gaussian_lattice_sums(dual);
    const double tail = 2.0 * std::exp(-dual) * sums.s0;
    const double tail_d = 2.0 * std::exp(-dual) * sums.s2;  // sum n^2 exp(-d n^2), doubled
    const double dlog_dmu = -0.5 / mu + (dual / mu) * tail_d / (1.0 + tail);
    return -(mu / beta) * dlog_dmu;
  }
  const GaussianSums sums = gaussian_lattice_sums(mu);
  const double e = std::exp(-mu);
  return (mu / beta) * 2.0 * e * sums.s2 / (1.0 + 2.0 * e * sums.s0);
}

double mean_energy_continuum_closed(double beta) {
  require_positive_beta(beta, "mean_energy_continuum_closed");
  return 0.5 / beta;
}

TwoLevelModel make_two_level(const Spectrum& spectrum) {
  if (spectrum.lattice.N() < 5)
    throw DomainError("two-level model needs N >= 5, got N = " + std::to_string(spectrum.lattice.N()));
  const double E1 = spectrum.mode(1).energy;
  const double E2 = spectrum.mode(2).energy;
  const double delta = E1 - E2;
  return {E1, E2, delta, std::abs(delta) / (2.0 * spectrum.particle.k_B)};
}

double two_level_partition(const Spectrum& spectrum, double beta) {
  if (!(beta >= 0.0)) throw DomainError("two_level_partition: beta must be >= 0");
  const TwoLevelModel model = make_two_level(spectrum);
  return std::exp(-beta * model.E1) + std::exp(-beta * model.E2);
}

double heat_capacity_two_level_x(double x) {
  const double r = x / std::cosh(x);
  return r * r;
}

double heat_capacity_two_level(const Spectrum& spectrum, double T) {
  if (!(T > 0.0)) throw DomainError("heat_capacity_two_level: T must be positive");
  const TwoLevelModel model = make_two_level(spectrum);
  return heat_capacity_two_level_x(model.theta_char / T);
}

double characteristic_temperature(const Spectrum& spectrum) {
  return make_two_level(spectrum).theta_char;
}

HeatCapacityPeak heat_capacity_peak(const Spectrum& spectrum, double T_lo, double T_hi) {
  if (!(T_lo > 0.0) || !(T_hi > T_lo)) throw DomainError("heat_capacity_peak: need 0 < T_lo < T_hi");
  const double theta = characteristic_temperature(spectrum);
  const auto cv = [&](double log_T) { return heat_capacity_two_level_x(theta / std::exp(log_T)); };
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = std::log(T_lo);
  double hi = std::log(T_hi);
  double c = hi - ratio * (hi - lo);
  double d = lo + ratio * (hi - lo);
  double fc = cv(c);
  double fd = cv(d);
  while (hi - lo > 1e-13 * std::max(1.0, std::abs(lo))) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - ratio * (hi - lo);
      fc = cv(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + ratio * (hi - lo);
      fd = cv(d);
    }
  }
  const double T = std::exp(0.5 * (lo + hi));
  return {T, theta / T, heat_capacity_two_level_x(theta / T)};
}

}  // namespace dqwell
