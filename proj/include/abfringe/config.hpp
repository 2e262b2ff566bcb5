#pragma once

#include <optional>
#include <span>
#include <string>

#include "json.hpp"

#include "abfringe/fields.hpp"
#include "abfringe/interferometer.hpp"
#include "abfringe/phase.hpp"

namespace abfringe {

enum class Experiment { cancel, faraday, wb, sweep, trajectory };

std::string experiment_name(Experiment e);
Experiment experiment_from_name(const std::string& name);  // ConfigError

// Numeric knobs shared by the quadrature-based experiments.
struct NumericsConfig {
  int n_sub = 4;       // Simpson panels per path segment
  int t_panels = 128;  // time panels for the traversal integral
  int n_phi = 64;      // azimuthal panels for surface flux
  int n_r = 64;        // radial panels for surface flux

  void validate() const;
};

struct FaradayConfig {
  double rho = 2.0;  // cm, circle radius
  double t = 1.0e-3;  // s, evaluation time

  void validate() const;
};

struct SweepConfig {
  FringeModel model = FringeModel::werner_brill;
  int n_samples = 120;

  void validate() const;
};

struct TrajectoryConfig {
  double lambda = 4.86e-10;  // cm, sets |p| = h/lambda
  double b0 = 1.0;           // G, uniform z field, must be nonzero
  double turns = 1.0;        // gyro periods to integrate
  double dt_per_period = 1.0e-4;  // RK4 step as a fraction of the period
  int n_samples = 512;       // states kept in the output table

  void validate() const;
};

// One experiment per invocation. Block names mirror the JSON config keys;
// every key carries its unit as a suffix (D_cm, B0_gauss, ...). Parsing is
// strict: an unknown key anywhere is a ConfigError.
struct RunConfig {
  Experiment experiment = Experiment::wb;
  Solenoid solenoid;       // cancel, faraday
  LoopSpec loop;           // cancel
  WBConfig wb;             // wb, sweep (sweep takes B0 from the waveform)
  bool include_second_order = true;  // wb dynamical phase truncation
  Waveform waveform;       // sweep field drive
  SweepConfig sweep;
  FaradayConfig faraday;
  TrajectoryConfig trajectory;
  NumericsConfig numerics;
  std::string out = "-";      // output path, "-" for stdout
  std::string format = "csv";  // "csv" or "json"

  void validate() const;
};

// Strict parse of a full config object. Throws ConfigError on unknown keys,
// wrong types, or invalid values.
RunConfig parse_config(const nlohmann::ordered_json& j);

// Read + parse a config file after applying `--set dotted.path=value`
// overrides; values parse as JSON scalars, falling back to strings. An
// explicit experiment (from the subcommand) overrides the file's.
RunConfig load_config(const std::string& path,
                      std::span<const std::string> overrides,
                      std::optional<Experiment> experiment);

// Default config for one experiment, parameterized with the reference
// values (D = 5 cm, theta = 0.02 rad, lambda = 4.86e-10 cm, 60 Hz drive).
// Round-trips through parse_config.
nlohmann::ordered_json default_config(Experiment e);

// All five defaults keyed by experiment name.
nlohmann::ordered_json all_default_configs();

// Serialize back out (for the metadata echo; parse(serialize(c)) == c).
nlohmann::ordered_json to_json(const RunConfig& c);

}  // namespace abfringe
