#pragma once

// Command-line front end: configuration, table computation and CSV/JSON
// emission. The `dqwell` tool is a thin wrapper around run_cli().

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "dqwell/lattice.hpp"

namespace dqwell::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitStatus : int {
  kExitSuccess = 0,
  kExitConfigError = 2,
  kExitDomainError = 3,
  kExitNumericError = 4,
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { spectrum, wavefunction, density_matrix, partition, mean_energy, heat_capacity, converge };
enum class OutputFormat { csv, json };
enum class SweepScale { linear, log };

const char* to_string(Command command);

struct Sweep {
  double start = 0.0;
  double stop = 0.0;
  long points = 0;
  SweepScale scale = SweepScale::linear;

  /// "start:stop:points[:linear|log]"
  static Sweep parse(const std::string& text);
  std::vector<double> values() const;
  std::string to_string() const;
};

struct RunConfig {
  Command command = Command::spectrum;
  long N = 1000;
  std::optional<double> a;
  std::optional<double> L;
  UnitMode unit_mode = UnitMode::natural;
  double m_star = 1.0;
  double hbar = 1.0;
  double k_B = 1.0;
  std::optional<double> beta;
  std::optional<double> T;
  std::optional<Sweep> sweep;
  OutputFormat output = OutputFormat::csv;
  std::string out_path;  // empty: standard output
  long mode = 1;         // wavefunction: n_E
  bool normalized = false;  // density-matrix
  std::vector<long> N_values{65, 129, 257};  // converge

  ParticleSpec particle() const;
  LatticeSpec lattice() const;
  LatticeSpec lattice(long N_override) const;
  /// beta from beta or T; nullopt when neither was given.
  std::optional<double> thermal_beta() const;
};

/// Parses command-line arguments (without the program name). Flags override
/// keys read from `--config FILE`. Throws ConfigError naming the offending
/// key; returns nullopt when help was requested.
std::optional<RunConfig> parse_config(const std::vector<std::string>& args);

std::string usage();

using Cell = std::variant<long, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Evaluates the configured command. Throws DomainError / NumericError.
Table compute(const RunConfig& config);

/// Doubles are written with 17 significant digits.
std::string format_cell(const Cell& cell);
void write_csv(const Table& table, std::ostream& out);
void write_json(const Table& table, const RunConfig& config, std::ostream& out);

/// Computes and emits the table; returns an ExitStatus.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_config + run with error reporting.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dqwell::cli
