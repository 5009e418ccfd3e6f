#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "emhd/params.hpp"
#include "emhd/solver.hpp"

namespace emhd {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitResolution = 3,
  kExitNumeric = 4,
};

struct ConfigKey {
  const char* name;
  const char* default_value;
  const char* help;
};

/// Every recognized key, in echo order.
const std::vector<ConfigKey>& config_keys();

/// Key-value experiment configuration. Values stay as the text they were given
/// in, so an echoed file reproduces a run exactly.
class ExperimentConfig {
 public:
  ExperimentConfig();

  /// Reads "key = value" lines; '#' starts a comment. Throws ConfigError.
  void load_file(const std::filesystem::path& path);
  /// Throws ConfigError for unknown keys.
  void set(const std::string& key, const std::string& value);

  const std::string& raw(const std::string& key) const;
  double number(const std::string& key) const;
  long integer(const std::string& key) const;
  bool flag(const std::string& key) const;
  /// Comma-separated list; empty text gives an empty list.
  std::vector<std::string> list(const std::string& key) const;
  std::vector<double> numbers(const std::string& key) const;

  /// All keys in declaration order as "key = value" lines.
  std::string echo() const;

  ParamSet params() const;
  ParamSet params_for_lambda(double lambda) const;
  SolverConfig solver(double t_end) const;

 private:
  std::map<std::string, std::string> values_;
};

/// 64-bit FNV-1a of the text, as 16 hex digits.
std::string fnv1a_hex(const std::string& text);

/// Writes config.txt and manifest.json into `out_dir` (created if missing).
void write_run_metadata(const std::filesystem::path& out_dir, const std::string& subcommand,
                        const ExperimentConfig& config, const std::vector<std::string>& outputs);

// Subcommands. Each returns an ExitCode; exceptions map to codes in run_command.
int cmd_init_data(const ExperimentConfig& config);
int cmd_run(const ExperimentConfig& config);
int cmd_frozen_run(const ExperimentConfig& config);
int cmd_approx_scan(const ExperimentConfig& config);
int cmd_region(const ExperimentConfig& config);
int cmd_sweep(const ExperimentConfig& config);

/// Dispatches by name and converts ConfigError / ResolutionError / NumericError
/// into exit codes, printing the message to stderr.
int run_command(const std::string& subcommand, const ExperimentConfig& config);

/// Worker count from EMHD_WORKERS (default 1).
int worker_count();

}  // namespace emhd
