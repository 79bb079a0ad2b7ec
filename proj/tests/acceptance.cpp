// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dqwell/bloch.hpp"
#include "dqwell/cli.hpp"
#include "dqwell/discrete_calculus.hpp"
#include "dqwell/thermo.hpp"
#include "dqwell/well_spectrum.hpp"
#include "oracles.hpp"

using namespace dqwell;

namespace {

int failures = 0;

void report(int id, const std::string& title, bool pass, const std::string& detail) {
  std::printf("criterion %2d %s  %s: %s\n", id, pass ? "PASS" : "FAIL", title.c_str(), detail.c_str());
  if (!pass) ++failures;
}

std::string fmt(const char* format, auto... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof buffer, format, args...);
  return buffer;
}

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

void calculus_identities() {
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<long> size(5, 200);
  double round_trip = 0.0;
  double closed = 0.0;
  int trials = 0;
  while (trials < 200) {
    const long N = size(rng);
    const long j = std::uniform_int_distribution<long>(1, N - 1)(rng);
    if (2 * j == N) continue;
    ++trials;
    const double alpha = oracle::pi * j / N;
    const auto cos_f = LatticeFunctiond::sample(N, [&](long n) { return std::cos(n * alpha); });
    const auto sin_f = LatticeFunctiond::sample(N, [&](long n) { return std::sin(n * alpha); });
    const auto sq_f = LatticeFunctiond::sample(N, [&](long n) { return std::pow(std::sin(n * alpha), 2); });

    for (const auto* f : {&cos_f, &sin_f, &sq_f}) {
      const auto F = antiderivative(*f, 1.0);
      for (long n = 1; n < N; ++n) round_trip = std::max(round_trip, std::abs(centered_diff1(F, n, 1.0) - (*f)[n]));
    }

    std::uniform_int_distribution<long> site(0, N);
    for (int k = 0; k < 10; ++k) {
      const long p = site(rng);
      long q = site(rng);
      const auto gap = [&](const LatticeFunctiond& f, AntiderivativeKind kind) {
        const double series = antiderivative_series(f, q, 1.0) - antiderivative_series(f, p, 1.0);
        const double form = closed_form_antiderivative(kind, alpha, q) - closed_form_antiderivative(kind, alpha, p);
        return std::abs(series - form);
      };
      closed = std::max(closed, gap(sq_f, AntiderivativeKind::sin2));
      if ((q - p) % 2 != 0) q = q > 0 ? q - 1 : q + 1;
      closed = std::max(closed, gap(cos_f, AntiderivativeKind::cos));
      closed = std::max(closed, gap(sin_f, AntiderivativeKind::sin));
    }
  }
  report(1, "calculus identities", round_trip <= 1e-10 && closed <= 1e-10,
         fmt("round trip %.3g, closed forms %.3g over %d random (N, j)", round_trip, closed, trials));
}

void spectrum_oracle() {
  const ParticleSpec p = ParticleSpec::natural();
  double worst = 0.0;
  for (long N : {4L, 10L, 101L, 200L}) {
    const double eps0 = p.energy_scale(1.0);
    Eigen::VectorXd numeric = eps0 * numeric_spectrum(build_hamiltonian_matrix(N));
    std::vector<double> got(numeric.data(), numeric.data() + numeric.size());
    std::vector<double> expected;
    for (long n = 1; n < N; ++n) expected.push_back(eps0 * std::pow(std::sin(oracle::pi * n / N), 2));
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    for (std::size_t i = 0; i < got.size(); ++i) worst = std::max(worst, std::abs(got[i] - expected[i]) / eps0);
  }
  Eigen::VectorXd four = numeric_spectrum(build_hamiltonian_matrix(4));
  std::sort(four.data(), four.data() + four.size());
  const double n4 = std::max({std::abs(four[0] - 0.5), std::abs(four[1] - 0.5), std::abs(four[2] - 1.0)});
  report(2, "spectrum oracle equivalence", worst <= 1e-10 && n4 <= 1e-10,
         fmt("max |E_numeric - E_closed| / eps0 = %.3g, N = 4 deviation %.3g", worst, n4));
}

void continuum_energies() {
  const ParticleSpec p = ParticleSpec::natural();
  bool pass = true;
  std::string detail;
  double previous = 0.0;
  for (long N : {100L, 200L, 400L, 800L}) {
    const auto lat = LatticeSpec::from_width(N, 1.0);
    const double Ed = energy_discrete(1, lat, p);
    const double Ec = energy_continuum(1, 1.0, p);
    const double measured = std::abs(Ed - Ec) / Ec;
    const double predicted = std::pow(oracle::pi / N, 2) / 3.0;
    const double deviation = std::abs(measured / predicted - 1.0);
    pass = pass && deviation <= 0.2;
    detail += fmt("N=%ld err %.4g (pred %.4g)", N, measured, predicted);
    if (previous > 0.0) {
      const double ratio = previous / measured;
      pass = pass && ratio >= 3.5 && ratio <= 4.5;
      detail += fmt(" ratio %.4f", ratio);
    }
    detail += "; ";
    previous = measured;
  }
  report(3, "continuum limit of energies", pass, detail);
}

void normalization_completeness() {
  const ParticleSpec p = ParticleSpec::natural();
  double norm = 0.0;
  for (long N : {4L, 5L, 10L, 21L, 64L, 101L, 200L}) {
    const auto lat = LatticeSpec::from_width(N, 2.0);
    const Spectrum s = make_spectrum(lat, p);
    for (const SpectralMode& mode : s.modes) {
      const LatticeFunctiond psi = eigenfunction(mode, lat);
      norm = std::max(norm, std::abs(definite_integral(psi * psi, lat.a()) - 1.0));
    }
  }
  double delta = 0.0;
  for (long N : {5L, 21L}) {
    const auto lat = LatticeSpec::from_spacing(N, 0.3);
    const DensityMatrix dm = density_matrix_spectral(make_spectrum(lat, p), 0.0);
    delta = std::max(delta, max_abs(dm.interior() - Eigen::MatrixXd::Identity(N - 1, N - 1) / lat.a()));
  }
  report(4, "normalization and completeness", norm <= 1e-12 && delta <= 1e-10,
         fmt("max |int Psi^2 - 1| = %.3g, max |rho(beta=0) - I/a| = %.3g", norm, delta));
}

void bloch_equation() {
  const ParticleSpec p = ParticleSpec::natural();
  const long N = 21;
  const auto lat = LatticeSpec::from_width(N, 1.0);
  const Spectrum s = make_spectrum(lat, p);
  const double eps0 = s.energy_scale();
  double propagation = 0.0;
  double residual = 0.0;
  for (double f : {0.5, 2.0, 5.0}) {
    const double beta = f / eps0;
    const DensityMatrix spectral = density_matrix_spectral(s, beta);
    const DensityMatrix propagated = propagate_bloch(lat, p, beta);
    propagation = std::max(propagation, max_abs(spectral.rho - propagated.rho));

    const double h = 1e-5 * beta;
    const Eigen::MatrixXd d_beta =
        (density_matrix_spectral(s, beta + h).interior() - density_matrix_spectral(s, beta - h).interior()) / (2.0 * h);
    const Eigen::MatrixXd rhs = eps0 * apply_bloch_stencil(spectral.interior());
    residual = std::max(residual, max_abs(d_beta - rhs) / max_abs(rhs));
  }
  report(5, "Bloch equation", propagation <= 1e-6 && residual <= 1e-6,
         fmt("spectral vs propagated max-abs %.3g, relative residual %.3g", propagation, residual));
}

void trace_relation() {
  const ParticleSpec p = ParticleSpec::natural();
  double odd = 0.0;
  double even = 0.0;
  for (long N : {3L, 4L, 5L, 7L, 10L, 21L, 64L, 101L}) {
    const auto lat = LatticeSpec::from_spacing(N, 1.0);
    const Spectrum s = make_spectrum(lat, p);
    for (double f : {0.0, 0.1, 1.0, 7.0}) {
      const double beta = f / s.energy_scale();
      const double trace = trace_integral(density_matrix_spectral(s, beta));
      const double Z = partition_discrete(s, beta).Z;
      if (N % 2 == 1)
        odd = std::max(odd, std::abs(trace - Z) / Z);
      else
        even = std::max(even, std::abs(trace - Z - std::exp(-beta * s.mode(N / 2).energy)) / Z);
    }
  }
  report(6, "trace relation", odd <= 1e-12 && even <= 1e-12,
         fmt("odd N |tr - Z| / Z = %.3g, even N |tr - Z - exp(-beta E_N/2)| / Z = %.3g", odd, even));
}

void worked_example() {
  const ParticleSpec p = ParticleSpec::si(9.1e-31, 1.054e-34, 1.38e-23);
  const double L = 1e-8;
  const double beta = 1.0 / (p.k_B * 300.0);
  const double mu = continuum_mu(L, p, beta);
  const double Z_closed = partition_continuum_closed(L, p, beta).Z;
  const double Z_sum = partition_continuum_sum(L, p, beta).Z;
  const double Z_theta = partition_theta(L, p, beta).Z;
  const bool mu_ok = std::abs(mu - 0.14537) <= 1e-4;
  const bool closed_ok = std::abs(Z_closed - 2.3245) <= 1e-3;
  const bool theta_ok = std::abs(Z_sum - Z_theta) / Z_sum <= 1e-9;
  const bool gap_ok = std::abs(Z_closed - Z_sum - 0.5) <= 1e-4;
  report(7, "worked example (electron, 100 A, 300 K)", mu_ok && closed_ok && theta_ok && gap_ok,
         fmt("mu %.6f [%s vs 0.14537], Z_closed %.6f [%s vs 2.3245], Z_sum %.10f vs Z_theta [%s], "
             "Z_closed - Z_sum %.12f [%s]",
             mu, mu_ok ? "ok" : "off", Z_closed, closed_ok ? "ok" : "off", Z_sum, theta_ok ? "ok" : "off",
             Z_closed - Z_sum, gap_ok ? "ok" : "off"));
}

void mean_energy_check() {
  const ParticleSpec p = ParticleSpec::natural();
  double fd = 0.0;
  for (long N : {5L, 21L, 101L, 1000L}) {
    const Spectrum s = make_spectrum(LatticeSpec::from_spacing(N, 1.0), p);
    for (double f : {0.01, 0.5, 3.0, 20.0}) {
      const double beta = f / s.energy_scale();
      const double h = 1e-4 * beta;
      const double oracle_mean =
          -(std::log(partition_discrete(s, beta + h).Z) - std::log(partition_discrete(s, beta - h).Z)) / (2.0 * h);
      fd = std::max(fd, std::abs(mean_energy(s, beta) / oracle_mean - 1.0));
    }
  }
  const double L = 1.0;
  const double beta = 0.01 * 2.0 * L * L / (oracle::pi * oracle::pi);  // mu = 0.01
  const double equipartition = std::abs(mean_energy_theta(L, p, beta) * 2.0 * beta - 1.0);
  report(8, "mean energy", fd <= 1e-6 && equipartition <= 1e-4,
         fmt("analytic vs finite difference %.3g, continuum vs 1/(2 beta) at mu = 0.01 %.3g", fd, equipartition));
}

void heat_capacity_check() {
  const ParticleSpec p = ParticleSpec::natural();
  const Spectrum s = make_spectrum(LatticeSpec::from_spacing(6, 1.0), p);
  const double theta = characteristic_temperature(s);
  const long points = 2001;
  const double lo = std::log(theta / 30.0);
  const double hi = std::log(theta / 0.01);
  std::vector<double> T(points);
  std::vector<double> cv(points);
  for (long i = 0; i < points; ++i) {
    T[i] = std::exp(lo + (hi - lo) * i / (points - 1));
    cv[i] = heat_capacity_two_level(s, T[i]);
  }
  int maxima = 0;
  long top = 0;
  for (long i = 1; i + 1 < points; ++i)
    if (cv[i] > cv[i - 1] && cv[i] >= cv[i + 1]) {
      ++maxima;
      top = i;
    }
  const HeatCapacityPeak peak = heat_capacity_peak(s, T[std::max(top - 1, 0L)], T[std::min(top + 1, points - 1)]);
  const double x_star = oracle::peak_x_bisection();
  double tail = 0.0;
  for (long i = 0; i < points; ++i) {
    const double x = theta / T[i];
    if (x <= 0.03 || x >= 15.0) tail = std::max(tail, cv[i]);
  }
  const bool pass = maxima == 1 && top > 0 && std::abs(peak.cv_over_R - 0.4392) <= 1e-3 &&
                    std::abs(peak.x - 1.1997) <= 1e-3 && std::abs(peak.x - x_star) <= 1e-3 && tail < 1e-3;
  report(9, "two-level heat capacity", pass,
         fmt("%d interior maximum, C_V/R = %.6f at x = %.6f (bisection x* = %.6f), max tail %.3g", maxima,
             peak.cv_over_R, peak.x, x_star, tail));
}

void continuum_density_matrix() {
  const ParticleSpec p = ParticleSpec::natural();
  const double L = 1.0;
  const double beta = 0.1 * 2.0 * L * L / (oracle::pi * oracle::pi);
  bool pass = true;
  std::string detail;
  double previous = 0.0;
  for (long N : {65L, 129L, 257L}) {
    const auto lat = LatticeSpec::from_width(N, L);
    const long n = lat.nearest_site(L / 3.0);
    const long m = lat.nearest_site(L / 2.0);
    const double rho_d = density_matrix_element(make_spectrum(lat, p), beta, n, m);
    const double rho_c = density_matrix_continuum(lat.x(n), lat.x(m), beta, p);
    const double err = std::abs(rho_d - rho_c);
    detail += fmt("N=%ld rho_d %.6g rho_c %.6g err %.3g", N, rho_d, rho_c, err);
    if (previous > 0.0) {
      const double ratio = previous / err;
      pass = pass && ratio >= 3.0;
      detail += fmt(" ratio %.3g", ratio);
    }
    detail += "; ";
    previous = err;
  }
  report(10, "discrete to continuum density matrix", pass, detail);
}

void cli_determinism() {
  const std::string dir = DQWELL_GOLDEN_DIR;
  std::ifstream cases(dir + "/cases.txt");
  std::string line;
  int total = 0;
  std::vector<std::string> mismatched;
  while (std::getline(cases, line)) {
    if (line.empty()) continue;
    std::istringstream words(line);
    std::string name;
    words >> name;
    std::vector<std::string> args;
    for (std::string w; words >> w;) args.push_back(w);
    std::ostringstream out;
    std::ostringstream err;
    const int status = cli::run_cli(args, out, err);
    std::ifstream golden(dir + "/" + name, std::ios::binary);
    std::stringstream expected;
    expected << golden.rdbuf();
    ++total;
    if (status != 0 || !golden || out.str() != expected.str()) mismatched.push_back(name);
  }
  std::string detail = fmt("%d golden files", total);
  for (const auto& name : mismatched) detail += ", mismatch " + name;
  report(11, "CLI determinism", total == 7 && mismatched.empty(), detail);
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria{
      calculus_identities, spectrum_oracle, continuum_energies, normalization_completeness,
      bloch_equation,      trace_relation,  worked_example,      mean_energy_check,
      heat_capacity_check, continuum_density_matrix, cli_determinism};
  for (const auto& criterion : criteria) {
    try {
      criterion();
    } catch (const std::exception& e) {
      std::printf("criterion exception: %s\n", e.what());
      ++failures;
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
