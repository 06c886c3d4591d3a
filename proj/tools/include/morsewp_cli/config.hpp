#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "morsewp/phasespace.hpp"

namespace morsewp::cli {

// Failures that map onto process exit codes.
class CliError : public std::runtime_error {
 public:
  CliError(const std::string& what, int exit_code)
      : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitTolerance = 2;
inline constexpr int kExitIo = 3;

class ConfigError : public CliError {
 public:
  explicit ConfigError(const std::string& what) : CliError(what, kExitValidation) {}
};

class IoError : public CliError {
 public:
  explicit IoError(const std::string& what) : CliError(what, kExitIo) {}
};

class ToleranceFailure : public CliError {
 public:
  explicit ToleranceFailure(const std::string& what) : CliError(what, kExitTolerance) {}
};

// A time either as an exact fraction r/q of T_rev or in atomic units.
struct TimeSpec {
  bool fractional = false;
  int r = 0;
  int q = 1;
  double value = 0.0;  // atomic units when not fractional
  std::string text;    // as written by the user

  double resolve(const Timescales& ts) const;
  // Filesystem-safe tag: "1-8" for 1/8, "840.5" for a plain time.
  std::string tag() const;
};

// "r/q" (coprime, q >= 1, r >= 0) or a nonnegative real. Throws ConfigError.
TimeSpec parse_time(const std::string& text);

struct RunConfig {
  MoleculeParams molecule = MoleculeParams::hydrogen_iodide();
  std::vector<double> alphas = {1.4, 2.5};
  std::vector<TimeSpec> times;  // empty: command defaults
  double x_min = -0.8;
  double x_max = 4.0;
  std::size_t grid_points = 4096;
  double p_max = 60.0;
  std::size_t p_points = 512;
  std::filesystem::path out_dir = ".";
  int precision = 12;
  // Write every k-th row and column of the Wigner matrices.
  std::size_t matrix_stride = 1;
  bool eigenfunctions = false;

  SpatialGrid x_grid() const { return SpatialGrid(x_min, x_max, grid_points); }
  MomentumGrid p_grid() const { return MomentumGrid::symmetric(p_max, p_points); }

  // Throws ConfigError on any inconsistent field.
  void validate() const;
};

// Recognized configuration keys, in documentation order.
const std::vector<std::string>& config_keys();

// Sets one key from its text value; list keys (alpha, time) take
// comma-separated values and replace the current list. Throws ConfigError on
// an unknown key or a malformed value.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

// Flat "key = value" file; '#' starts a comment, blank lines are ignored.
// Throws IoError if the file cannot be read, ConfigError on bad content.
void load_config_file(const std::filesystem::path& path, RunConfig& config);

}  // namespace morsewp::cli
