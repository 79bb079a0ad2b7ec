#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>

#include "dqwell/bloch.hpp"
#include "dqwell/cli.hpp"
#include "dqwell/thermo.hpp"
#include "dqwell/well_spectrum.hpp"

namespace dqwell::cli {

namespace {

using Row = std::vector<Cell>;

Table spectrum_table(const RunConfig& config) {
  const LatticeSpec lattice = config.lattice();
  const ParticleSpec particle = config.particle();
  const Spectrum spectrum = make_spectrum(lattice, particle);
  Table table{{"n_E", "e_tilde", "E", "E_continuum", "rel_error"}, {}};
  for (const auto& mode : spectrum.modes)
    table.rows.push_back({mode.n_E, mode.e_tilde, mode.energy,
                          energy_continuum(mode.n_E, lattice.L(), particle),
                          continuum_limit_error(mode.n_E, lattice.N())});
  return table;
}

Table wavefunction_table(const RunConfig& config) {
  const LatticeSpec lattice = config.lattice();
  const Spectrum spectrum = make_spectrum(lattice, config.particle());
  const LatticeFunctiond psi = eigenfunction(spectrum.mode(config.mode), lattice);
  Table table{{"n", "x_n", "psi"}, {}};
  for (long n = 0; n <= lattice.N(); ++n) table.rows.push_back({n, lattice.x(n), psi[n]});
  return table;
}

Table density_matrix_table(const RunConfig& config) {
  const Spectrum spectrum = make_spectrum(config.lattice(), config.particle());
  const double beta = *config.thermal_beta();
  DensityMatrix dm = density_matrix_spectral(spectrum, beta);
  if (config.normalized) dm = density_matrix_normalized(dm, partition_discrete(spectrum, beta).Z);
  Table table{{"n", "n_prime", "rho"}, {}};
  const long N = spectrum.lattice.N();
  for (long n = 0; n <= N; ++n)
    for (long m = 0; m <= N; ++m) table.rows.push_back({n, m, dm(n, m)});
  return table;
}

std::vector<double> thermal_points(const RunConfig& config) {
  if (config.sweep) return config.sweep->values();
  return {*config.thermal_beta()};
}

Table partition_table(const RunConfig& config) {
  const LatticeSpec lattice = config.lattice();
  const ParticleSpec particle = config.particle();
  const Spectrum spectrum = make_spectrum(lattice, particle);
  Table table{{"beta", "Z_discrete", "Z_continuum_sum", "Z_closed", "Z_theta", "F"}, {}};
  for (double beta : thermal_points(config)) {
    const PartitionResult discrete = partition_discrete(spectrum, beta);
    table.rows.push_back({beta, discrete.Z, partition_continuum_sum(lattice.L(), particle, beta).Z,
                          partition_continuum_closed(lattice.L(), particle, beta).Z,
                          partition_theta(lattice.L(), particle, beta).Z, discrete.free_energy});
  }
  return table;
}

Table mean_energy_table(const RunConfig& config) {
  const LatticeSpec lattice = config.lattice();
  const ParticleSpec particle = config.particle();
  const Spectrum spectrum = make_spectrum(lattice, particle);
  Table table{{"beta", "H_mean_discrete", "H_mean_continuum"}, {}};
  for (double beta : thermal_points(config))
    table.rows.push_back({beta, mean_energy(spectrum, beta),
                          mean_energy_continuum_sum(lattice.L(), particle, beta)});
  return table;
}

Table heat_capacity_table(const RunConfig& config) {
  const Spectrum spectrum = make_spectrum(config.lattice(), config.particle());
  const double theta = characteristic_temperature(spectrum);
  std::vector<double> temperatures;
  if (config.sweep)
    temperatures = config.sweep->values();
  else
    temperatures.push_back(config.T ? *config.T : 1.0 / (config.k_B * *config.beta));
  Table table{{"T", "x", "Cv_over_R"}, {}};
  for (double T : temperatures)
    table.rows.push_back({T, theta / T, heat_capacity_two_level(spectrum, T)});
  return table;
}

Table converge_table(const RunConfig& config) {
  const ParticleSpec particle = config.particle();
  const double L = config.L.value_or(1.0);
  const double beta = *config.thermal_beta();
  std::vector<long> sizes = config.N_values;
  std::sort(sizes.begin(), sizes.end());

  const double Z_c = partition_continuum_sum(L, particle, beta).Z;
  const double H_c = mean_energy_continuum_sum(L, particle, beta);
  Table table{{"N", "quantity", "value", "error_vs_continuum"}, {}};
  for (long N : sizes) {
    const LatticeSpec lattice = LatticeSpec::from_width(N, L);
    const Spectrum spectrum = make_spectrum(lattice, particle);

    const double E1 = energy_discrete(1, lattice, particle);
    table.rows.push_back({N, std::string("energy_1"), E1, continuum_limit_error(1, N)});

    const double Z_d = partition_discrete(spectrum, beta).Z;
    table.rows.push_back({N, std::string("partition"), Z_d, std::abs(Z_d - Z_c) / Z_c});

    const double H_d = mean_energy(spectrum, beta);
    table.rows.push_back({N, std::string("mean_energy"), H_d, std::abs(H_d - H_c) / H_c});

    const long n = lattice.nearest_site(L / 3.0);
    const long m = lattice.nearest_site(L / 2.0);
    const double rho_d = density_matrix_element(spectrum, beta, n, m);
    const double rho_c = density_matrix_continuum(lattice.x(n), lattice.x(m), beta, particle);
    table.rows.push_back({N, std::string("rho_interior"), rho_d, std::abs(rho_d - rho_c) / rho_c});
  }
  return table;
}

nlohmann::ordered_json json_cell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, double>) {
          if (!std::isfinite(v)) return nullptr;
        }
        return v;
      },
      cell);
}

nlohmann::ordered_json config_echo(const RunConfig& config) {
  nlohmann::ordered_json echo;
  echo["command"] = to_string(config.command);
  if (config.command == Command::converge)
    echo["N_values"] = config.N_values;
  else
    echo["N"] = config.N;
  if (config.a) echo["a"] = *config.a;
  if (config.L) echo["L"] = *config.L;
  echo["unit_mode"] = config.unit_mode == UnitMode::SI ? "SI" : "natural";
  echo["m_star"] = config.m_star;
  echo["hbar"] = config.hbar;
  echo["k_B"] = config.k_B;
  if (config.beta) echo["beta"] = *config.beta;
  if (config.T) echo["T"] = *config.T;
  if (config.sweep) echo["sweep"] = config.sweep->to_string();
  if (config.command == Command::wavefunction) echo["mode"] = config.mode;
  if (config.command == Command::density_matrix) echo["normalized"] = config.normalized;
  return echo;
}

}  // namespace

Table compute(const RunConfig& config) {
  switch (config.command) {
    case Command::spectrum:
      return spectrum_table(config);
    case Command::wavefunction:
      return wavefunction_table(config);
    case Command::density_matrix:
      return density_matrix_table(config);
    case Command::partition:
      return partition_table(config);
    case Command::mean_energy:
      return mean_energy_table(config);
    case Command::heat_capacity:
      return heat_capacity_table(config);
    case Command::converge:
      return converge_table(config);
  }
  throw ConfigError("unknown command");
}

std::string format_cell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, double>) {
          char buf[32];
          std::snprintf(buf, sizeof buf, "%.17g", v);
          return buf;
        } else if constexpr (std::is_same_v<V, long>) {
          return std::to_string(v);
        } else {
          return v;
        }
      },
      cell);
}

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_cell(row[i]);
    out << '\n';
  }
}

void write_json(const Table& table, const RunConfig& config, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["config"] = config_echo(config);
  doc["columns"] = table.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    auto r = nlohmann::ordered_json::array();
    for (const auto& cell : row) r.push_back(json_cell(cell));
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  doc["meta"] = {{"version", kVersion},
                 {"unit_mode", config.unit_mode == UnitMode::SI ? "SI" : "natural"}};
  out << doc.dump(2) << '\n';
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Table table;
  try {
    table = compute(config);
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << '\n';
    return kExitNumericError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomainError;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!config.out_path.empty()) {
    file.open(config.out_path, std::ios::binary);
    if (!file) {
      err << "config error: cannot open --out " << config.out_path << '\n';
      return kExitConfigError;
    }
    sink = &file;
  }
  if (config.output == OutputFormat::json)
    write_json(table, config, *sink);
  else
    write_csv(table, *sink);
  return kExitSuccess;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty()) {
    err << usage();
    return kExitConfigError;
  }
  std::optional<RunConfig> config;
  try {
    config = parse_config(args);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n\n" << usage();
    return kExitConfigError;
  } catch (const DomainError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }
  if (!config) {
    out << usage();
    return kExitSuccess;
  }
  return run(*config, out, err);
}

}  // namespace dqwell::cli
