#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

#include "dqwell/cli.hpp"

namespace dqwell::cli {

namespace {

struct CommandName {
  const char* name;
  Command command;
};

constexpr CommandName kCommands[] = {
    {"spectrum", Command::spectrum},         {"wavefunction", Command::wavefunction},
    {"density-matrix", Command::density_matrix}, {"partition", Command::partition},
    {"mean-energy", Command::mean_energy},   {"heat-capacity", Command::heat_capacity},
    {"converge", Command::converge},
};

bool is_thermal(Command c) {
  return c == Command::density_matrix || c == Command::partition || c == Command::mean_energy ||
         c == Command::heat_capacity || c == Command::converge;
}

bool allows_sweep(Command c) {
  return c == Command::partition || c == Command::mean_energy || c == Command::heat_capacity;
}

void require_positive(double value, const char* key) {
  if (!(value > 0.0) || !std::isfinite(value))
    throw ConfigError(std::string("--") + key + " must be a positive number");
}

std::vector<long> parse_long_list(const std::string& text, const char* key) {
  std::vector<long> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      values.push_back(v);
    } catch (const std::exception&) {
      throw ConfigError(std::string("--") + key + ": '" + item + "' is not an integer");
    }
  }
  if (values.empty()) throw ConfigError(std::string("--") + key + " is empty");
  return values;
}

std::unique_ptr<CLI::App> make_app(RunConfig& config, std::string& command, std::string& sweep, std::string& format,
                  std::string& n_values) {
  auto owner = std::make_unique<CLI::App>("Free particle in a discrete infinite square well", "dqwell");
  CLI::App& app = *owner;
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.set_config("--config", "", "flat key = value file; flags take precedence");

  std::vector<std::string> names;
  for (const auto& c : kCommands) names.emplace_back(c.name);
  app.add_option("command", command, "spectrum | wavefunction | density-matrix | partition | "
                                     "mean-energy | heat-capacity | converge")
      ->required()
      ->check(CLI::IsMember(names));

  app.add_option("--N", config.N, "number of lattice spacings (sites 0..N)");
  auto* a = app.add_option("--a", config.a, "lattice spacing");
  auto* L = app.add_option("--L", config.L, "well width");
  a->excludes(L);

  auto* natural = app.add_flag("--natural", "natural units hbar = m* = k_B = 1 (default)");
  auto* si = app.add_flag("--SI", "SI units");
  natural->excludes(si);
  app.add_option("--m-star", config.m_star, "effective mass (SI mode)");
  app.add_option("--hbar", config.hbar, "reduced Planck constant (SI mode)");
  app.add_option("--kB", config.k_B, "Boltzmann constant (SI mode)");

  auto* beta = app.add_option("--beta", config.beta, "inverse temperature");
  auto* T = app.add_option("--T", config.T, "temperature");
  beta->excludes(T);
  app.add_option("--sweep", sweep, "start:stop:points[:linear|log] over beta (T for heat-capacity)");

  app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", config.out_path, "output file (default: standard output)");
  app.add_option("--mode", config.mode, "principal quantum number for wavefunction");
  app.add_flag("--normalized", config.normalized, "divide the density matrix by Z");
  app.add_option("--N-values", n_values, "comma-separated lattice sizes for converge");
  return owner;
}

}  // namespace

const char* to_string(Command command) {
  for (const auto& c : kCommands)
    if (c.command == command) return c.name;
  return "unknown";
}

Sweep Sweep::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ':')) parts.push_back(item);
  if (parts.size() != 3 && parts.size() != 4)
    throw ConfigError("--sweep: expected start:stop:points[:linear|log], got '" + text + "'");
  Sweep sweep;
  try {
    sweep.start = std::stod(parts[0]);
    sweep.stop = std::stod(parts[1]);
    sweep.points = std::stol(parts[2]);
  } catch (const std::exception&) {
    throw ConfigError("--sweep: malformed number in '" + text + "'");
  }
  if (parts.size() == 4) {
    if (parts[3] == "log")
      sweep.scale = SweepScale::log;
    else if (parts[3] != "linear")
      throw ConfigError("--sweep: scale must be linear or log, got '" + parts[3] + "'");
  }
  if (sweep.points < 2) throw ConfigError("--sweep: points must be >= 2");
  if (!(sweep.start > 0.0) || !(sweep.stop > 0.0))
    throw ConfigError("--sweep: start and stop must be positive");
  return sweep;
}

std::vector<double> Sweep::values() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(points));
  for (long i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(points - 1);
    if (scale == SweepScale::log)
      out.push_back(std::exp(std::log(start) + t * (std::log(stop) - std::log(start))));
    else
      out.push_back(start + t * (stop - start));
  }
  return out;
}

std::string Sweep::to_string() const {
  std::ostringstream s;
  s.precision(17);
  s << start << ':' << stop << ':' << points << ':' << (scale == SweepScale::log ? "log" : "linear");
  return s.str();
}

ParticleSpec RunConfig::particle() const {
  if (unit_mode == UnitMode::natural) return ParticleSpec::natural();
  return ParticleSpec::si(m_star, hbar, k_B);
}

LatticeSpec RunConfig::lattice() const { return lattice(N); }

LatticeSpec RunConfig::lattice(long N_override) const {
  if (L) return LatticeSpec::from_width(N_override, *L);
  return LatticeSpec::from_spacing(N_override, a.value_or(1.0));
}

std::optional<double> RunConfig::thermal_beta() const {
  if (beta) return beta;
  if (T) return 1.0 / (k_B * *T);
  return std::nullopt;
}

std::string usage() {
  RunConfig config;
  std::string command, sweep, format, n_values;
  return make_app(config, command, sweep, format, n_values)->help();
}

std::optional<RunConfig> parse_config(const std::vector<std::string>& args) {
  if (args.empty()) throw ConfigError("no command given");
  RunConfig config;
  std::string command, sweep, format = "csv", n_values;
  const auto owner = make_app(config, command, sweep, format, n_values);
  CLI::App& app = *owner;

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  for (const auto& c : kCommands)
    if (command == c.name) config.command = c.command;
  config.output = format == "json" ? OutputFormat::json : OutputFormat::csv;
  config.unit_mode = app.count("--SI") > 0 ? UnitMode::SI : UnitMode::natural;

  const bool constants_given = app.count("--m-star") + app.count("--hbar") + app.count("--kB") > 0;
  if (config.unit_mode == UnitMode::natural) {
    if (constants_given) throw ConfigError("--m-star/--hbar/--kB require --SI");
  } else {
    if (app.count("--m-star") == 0) config.m_star = ParticleSpec::kElectronMassSI;
    if (app.count("--hbar") == 0) config.hbar = ParticleSpec::kHbarSI;
    if (app.count("--kB") == 0) config.k_B = ParticleSpec::kBoltzmannSI;
  }
  require_positive(config.m_star, "m-star");
  require_positive(config.hbar, "hbar");
  require_positive(config.k_B, "kB");
  if (config.a) require_positive(*config.a, "a");
  if (config.L) require_positive(*config.L, "L");
  if (config.unit_mode == UnitMode::SI && !config.a && !config.L)
    throw ConfigError("SI mode needs --a or --L");

  if (config.command == Command::converge && config.a)
    throw ConfigError("converge holds the width fixed; give --L instead of --a");
  if (config.N < 2) throw ConfigError("--N must be >= 2");
  if (!n_values.empty()) config.N_values = parse_long_list(n_values, "N-values");
  for (long n : config.N_values)
    if (n < 2) throw ConfigError("--N-values: every N must be >= 2");

  if (config.beta && !(*config.beta > 0.0)) throw ConfigError("--beta must be a positive number");
  if (config.T) require_positive(*config.T, "T");

  if (!sweep.empty()) {
    if (!allows_sweep(config.command))
      throw ConfigError(std::string("--sweep is not supported by ") + to_string(config.command));
    config.sweep = Sweep::parse(sweep);
  }
  if (is_thermal(config.command)) {
    const bool point = config.beta || config.T;
    if (config.sweep && point) throw ConfigError("--sweep excludes --beta and --T");
    if (!config.sweep && !point)
      throw ConfigError(std::string(to_string(config.command)) + " needs exactly one of --beta, --T");
  }
  return config;
}

}  // namespace dqwell::cli
