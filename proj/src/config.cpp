#include "abfringe/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <string>

#include "abfringe/errors.hpp"

namespace abfringe {

namespace {

using json = nlohmann::ordered_json;

void expect_object(const json& j, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be a JSON object");
}

void check_keys(const json& j, const std::string& where,
                std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : allowed) {
      if (it.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ConfigError("unknown key '" + it.key() + "' in " + where);
    }
  }
}

double get_num(const json& j, const char* key, double fallback,
               const std::string& where) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_number()) {
    throw ConfigError(where + "." + key + " must be a number");
  }
  return v.get<double>();
}

int get_int(const json& j, const char* key, int fallback,
            const std::string& where) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_number_integer()) {
    throw ConfigError(where + "." + key + " must be an integer");
  }
  return v.get<int>();
}

bool get_bool(const json& j, const char* key, bool fallback,
              const std::string& where) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_boolean()) {
    throw ConfigError(where + "." + key + " must be true or false");
  }
  return v.get<bool>();
}

std::string get_str(const json& j, const char* key,
                    const std::string& fallback, const std::string& where) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_string()) {
    throw ConfigError(where + "." + key + " must be a string");
  }
  return v.get<std::string>();
}

Waveform parse_waveform(const json& j, const std::string& where) {
  expect_object(j, where);
  check_keys(j, where,
             {"kind", "b_static_gauss", "b_amp_gauss", "freq_hz",
              "phase0_rad", "rate_gauss_per_s", "ramp_t0_s"});
  Waveform w;
  const std::string kind = get_str(j, "kind", "constant", where);
  if (kind == "constant") {
    w.kind = WaveformKind::constant;
  } else if (kind == "sinusoid") {
    w.kind = WaveformKind::sinusoid;
  } else if (kind == "ramp") {
    w.kind = WaveformKind::ramp;
  } else {
    throw ConfigError(where + ".kind must be constant, sinusoid, or ramp");
  }
  w.b_static = get_num(j, "b_static_gauss", 0.0, where);
  w.b_amp = get_num(j, "b_amp_gauss", 0.0, where);
  w.freq_hz = get_num(j, "freq_hz", 0.0, where);
  w.phase0 = get_num(j, "phase0_rad", 0.0, where);
  w.rate = get_num(j, "rate_gauss_per_s", 0.0, where);
  w.ramp_t0 = get_num(j, "ramp_t0_s", 0.0, where);
  w.validate();
  return w;
}

json waveform_to_json(const Waveform& w) {
  json j;
  switch (w.kind) {
    case WaveformKind::constant:
      j["kind"] = "constant";
      break;
    case WaveformKind::sinusoid:
      j["kind"] = "sinusoid";
      break;
    case WaveformKind::ramp:
      j["kind"] = "ramp";
      break;
  }
  j["b_static_gauss"] = w.b_static;
  j["b_amp_gauss"] = w.b_amp;
  j["freq_hz"] = w.freq_hz;
  j["phase0_rad"] = w.phase0;
  j["rate_gauss_per_s"] = w.rate;
  j["ramp_t0_s"] = w.ramp_t0;
  return j;
}

FringeModel model_from_name(const std::string& name,
                            const std::string& where) {
  if (name == "naive_ab") return FringeModel::naive_ab;
  if (name == "werner_brill") return FringeModel::werner_brill;
  if (name == "full_cancellation") return FringeModel::full_cancellation;
  throw ConfigError(where +
                    ".model must be naive_ab, werner_brill, or "
                    "full_cancellation");
}

std::string model_name(FringeModel m) {
  switch (m) {
    case FringeModel::naive_ab:
      return "naive_ab";
    case FringeModel::werner_brill:
      return "werner_brill";
    case FringeModel::full_cancellation:
      return "full_cancellation";
  }
  return "werner_brill";
}

}  // namespace

std::string experiment_name(Experiment e) {
  switch (e) {
    case Experiment::cancel:
      return "cancel";
    case Experiment::faraday:
      return "faraday";
    case Experiment::wb:
      return "wb";
    case Experiment::sweep:
      return "sweep";
    case Experiment::trajectory:
      return "trajectory";
  }
  return "wb";
}

Experiment experiment_from_name(const std::string& name) {
  if (name == "cancel") return Experiment::cancel;
  if (name == "faraday") return Experiment::faraday;
  if (name == "wb") return Experiment::wb;
  if (name == "sweep") return Experiment::sweep;
  if (name == "trajectory") return Experiment::trajectory;
  throw ConfigError("unknown experiment '" + name + "'");
}

void NumericsConfig::validate() const {
  if (n_sub < 1 || n_sub > 4096) {
    throw ConfigError("numerics.n_sub must be in [1, 4096]");
  }
  if (t_panels < 1 || t_panels > 1000000) {
    throw ConfigError("numerics.t_panels must be in [1, 1000000]");
  }
  if (n_phi < 1 || n_phi > 100000) {
    throw ConfigError("numerics.n_phi must be in [1, 100000]");
  }
  if (n_r < 1 || n_r > 100000) {
    throw ConfigError("numerics.n_r must be in [1, 100000]");
  }
}

void FaradayConfig::validate() const {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw ConfigError("faraday.rho_cm must be positive");
  }
  if (!std::isfinite(t)) throw ConfigError("faraday.t_s must be finite");
}

void SweepConfig::validate() const {
  if (n_samples < 2 || n_samples > 10000000) {
    throw ConfigError("sweep.n_samples must be in [2, 10000000]");
  }
}

void TrajectoryConfig::validate() const {
  if (!(lambda > 0.0)) {
    throw ConfigError("trajectory.lambda_cm must be positive");
  }
  if (b0 == 0.0 || !std::isfinite(b0)) {
    throw ConfigError("trajectory.B0_gauss must be nonzero");
  }
  if (!(turns > 0.0) || !std::isfinite(turns)) {
    throw ConfigError("trajectory.turns must be positive");
  }
  if (!(dt_per_period > 0.0) || dt_per_period > 0.1) {
    throw ConfigError("trajectory.dt_per_period must be in (0, 0.1]");
  }
  if (n_samples < 2 || n_samples > 10000000) {
    throw ConfigError("trajectory.n_samples must be in [2, 10000000]");
  }
}

void RunConfig::validate() const {
  if (format != "csv" && format != "json") {
    throw ConfigError("format must be csv or json, got '" + format + "'");
  }
  solenoid.validate();
  waveform.validate();
  wb.validate();
  sweep.validate();
  faraday.validate();
  trajectory.validate();
  numerics.validate();
  // The loop's wall-clearance test needs the solenoid; it throws
  // GeometryError because an infeasible loop is a geometry problem, not a
  // malformed config.
  if (experiment == Experiment::cancel) loop.validate(solenoid);
}

RunConfig parse_config(const nlohmann::ordered_json& j) {
  expect_object(j, "config");
  check_keys(j, "config",
             {"experiment", "out", "format", "solenoid", "loop",
              "interferometer", "waveform", "sweep", "faraday", "trajectory",
              "numerics"});
  if (!j.contains("experiment")) {
    throw ConfigError("config needs an 'experiment'");
  }
  RunConfig c;
  c.experiment = experiment_from_name(get_str(j, "experiment", "", "config"));
  c.out = get_str(j, "out", "-", "config");
  c.format = get_str(j, "format", "csv", "config");

  if (j.contains("solenoid")) {
    const auto& b = j.at("solenoid");
    expect_object(b, "solenoid");
    check_keys(b, "solenoid", {"radius_cm", "waveform"});
    c.solenoid.radius = get_num(b, "radius_cm", 1.0, "solenoid");
    if (b.contains("waveform")) {
      c.solenoid.waveform = parse_waveform(b.at("waveform"),
                                           "solenoid.waveform");
    }
  }
  if (j.contains("loop")) {
    const auto& b = j.at("loop");
    expect_object(b, "loop");
    check_keys(b, "loop",
               {"rho_cm", "z0_cm", "t0_s", "duration_s", "direction",
                "n_events"});
    c.loop.rho = get_num(b, "rho_cm", c.loop.rho, "loop");
    c.loop.z0 = get_num(b, "z0_cm", c.loop.z0, "loop");
    c.loop.t0 = get_num(b, "t0_s", c.loop.t0, "loop");
    c.loop.duration = get_num(b, "duration_s", c.loop.duration, "loop");
    c.loop.direction = get_int(b, "direction", c.loop.direction, "loop");
    c.loop.n_events = get_int(b, "n_events", c.loop.n_events, "loop");
  }
  if (j.contains("interferometer")) {
    const auto& b = j.at("interferometer");
    expect_object(b, "interferometer");
    check_keys(b, "interferometer",
               {"D_cm", "theta_rad", "lambda_cm", "B0_gauss",
                "include_second_order"});
    c.wb.d = get_num(b, "D_cm", c.wb.d, "interferometer");
    c.wb.theta = get_num(b, "theta_rad", c.wb.theta, "interferometer");
    c.wb.lambda = get_num(b, "lambda_cm", c.wb.lambda, "interferometer");
    c.wb.b0 = get_num(b, "B0_gauss", c.wb.b0, "interferometer");
    c.include_second_order = get_bool(b, "include_second_order",
                                      c.include_second_order,
                                      "interferometer");
  }
  if (j.contains("waveform")) {
    c.waveform = parse_waveform(j.at("waveform"), "waveform");
  }
  if (j.contains("sweep")) {
    const auto& b = j.at("sweep");
    expect_object(b, "sweep");
    check_keys(b, "sweep", {"model", "n_samples"});
    c.sweep.model =
        model_from_name(get_str(b, "model", model_name(c.sweep.model),
                                "sweep"),
                        "sweep");
    c.sweep.n_samples = get_int(b, "n_samples", c.sweep.n_samples, "sweep");
  }
  if (j.contains("faraday")) {
    const auto& b = j.at("faraday");
    expect_object(b, "faraday");
    check_keys(b, "faraday", {"rho_cm", "t_s"});
    c.faraday.rho = get_num(b, "rho_cm", c.faraday.rho, "faraday");
    c.faraday.t = get_num(b, "t_s", c.faraday.t, "faraday");
  }
  if (j.contains("trajectory")) {
    const auto& b = j.at("trajectory");
    expect_object(b, "trajectory");
    check_keys(b, "trajectory",
               {"lambda_cm", "B0_gauss", "turns", "dt_per_period",
                "n_samples"});
    c.trajectory.lambda = get_num(b, "lambda_cm", c.trajectory.lambda,
                                  "trajectory");
    c.trajectory.b0 = get_num(b, "B0_gauss", c.trajectory.b0, "trajectory");
    c.trajectory.turns = get_num(b, "turns", c.trajectory.turns,
                                 "trajectory");
    c.trajectory.dt_per_period = get_num(b, "dt_per_period",
                                         c.trajectory.dt_per_period,
                                         "trajectory");
    c.trajectory.n_samples = get_int(b, "n_samples", c.trajectory.n_samples,
                                     "trajectory");
  }
  if (j.contains("numerics")) {
    const auto& b = j.at("numerics");
    expect_object(b, "numerics");
    check_keys(b, "numerics", {"n_sub", "t_panels", "n_phi", "n_r"});
    c.numerics.n_sub = get_int(b, "n_sub", c.numerics.n_sub, "numerics");
    c.numerics.t_panels = get_int(b, "t_panels", c.numerics.t_panels,
                                  "numerics");
    c.numerics.n_phi = get_int(b, "n_phi", c.numerics.n_phi, "numerics");
    c.numerics.n_r = get_int(b, "n_r", c.numerics.n_r, "numerics");
  }
  c.validate();
  return c;
}

namespace {

void apply_override(json& j, const std::string& item) {
  const auto eq = item.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError("--set expects dotted.key=value, got '" + item + "'");
  }
  const std::string path = item.substr(0, eq);
  const std::string raw = item.substr(eq + 1);
  json value;
  try {
    value = json::parse(raw);
  } catch (const json::exception&) {
    value = raw;  // bare strings need no quotes
  }
  json* node = &j;
  std::size_t start = 0;
  while (true) {
    const auto dot = path.find('.', start);
    const std::string part = path.substr(
        start, dot == std::string::npos ? std::string::npos : dot - start);
    if (part.empty()) {
      throw ConfigError("--set path has an empty segment: '" + path + "'");
    }
    if (dot == std::string::npos) {
      (*node)[part] = value;
      return;
    }
    json& next = (*node)[part];
    if (!next.is_object() && !next.is_null()) {
      throw ConfigError("--set cannot descend through non-object '" + part +
                        "' in '" + path + "'");
    }
    node = &next;
    start = dot + 1;
  }
}

}  // namespace

RunConfig load_config(const std::string& path,
                      std::span<const std::string> overrides,
                      std::optional<Experiment> experiment) {
  json j;
  if (path.empty()) {
    if (!experiment) {
      throw ConfigError("no config file and no experiment given");
    }
    j = default_config(*experiment);
  } else {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file '" + path + "'");
    try {
      j = json::parse(f);
    } catch (const json::exception& ex) {
      throw ConfigError("config file '" + path +
                        "' is not valid JSON: " + ex.what());
    }
  }
  for (const auto& item : overrides) apply_override(j, item);
  if (experiment) j["experiment"] = experiment_name(*experiment);
  return parse_config(j);
}

nlohmann::ordered_json default_config(Experiment e) {
  json j;
  j["experiment"] = experiment_name(e);
  j["out"] = "-";
  j["format"] = "csv";
  switch (e) {
    case Experiment::cancel:
      j["solenoid"] = {{"radius_cm", 1.0},
                       {"waveform",
                        {{"kind", "ramp"},
                         {"b_static_gauss", 0.0},
                         {"rate_gauss_per_s", 1.0},
                         {"ramp_t0_s", 0.0}}}};
      j["loop"] = {{"rho_cm", 2.0},     {"z0_cm", 0.0},
                   {"t0_s", 2.5},       {"duration_s", 0.0},
                   {"direction", 1},    {"n_events", 256}};
      j["numerics"] = {{"n_sub", 4}, {"t_panels", 128}, {"n_phi", 64},
                       {"n_r", 64}};
      break;
    case Experiment::faraday:
      j["solenoid"] = {{"radius_cm", 1.0},
                       {"waveform",
                        {{"kind", "sinusoid"},
                         {"b_static_gauss", 0.0},
                         {"b_amp_gauss", 1.0},
                         {"freq_hz", 60.0},
                         {"phase0_rad", 0.0}}}};
      j["faraday"] = {{"rho_cm", 2.0}, {"t_s", 1.0e-3}};
      j["numerics"] = {{"n_sub", 4}, {"t_panels", 128}, {"n_phi", 64},
                       {"n_r", 64}};
      break;
    case Experiment::wb:
      j["interferometer"] = {{"D_cm", 5.0},
                             {"theta_rad", 0.02},
                             {"lambda_cm", 4.86e-10},
                             {"B0_gauss", 1.0},
                             {"include_second_order", true}};
      break;
    case Experiment::sweep:
      j["interferometer"] = {{"D_cm", 5.0},
                             {"theta_rad", 0.02},
                             {"lambda_cm", 4.86e-10},
                             {"B0_gauss", 0.0},
                             {"include_second_order", true}};
      j["waveform"] = {{"kind", "sinusoid"},
                       {"b_static_gauss", 0.0},
                       {"b_amp_gauss", 1.0},
                       {"freq_hz", 60.0},
                       {"phase0_rad", 0.0}};
      j["sweep"] = {{"model", "werner_brill"}, {"n_samples", 120}};
      break;
    case Experiment::trajectory:
      j["trajectory"] = {{"lambda_cm", 4.86e-10},
                         {"B0_gauss", 1.0},
                         {"turns", 1.0},
                         {"dt_per_period", 1.0e-4},
                         {"n_samples", 512}};
      break;
  }
  return j;
}

nlohmann::ordered_json all_default_configs() {
  json j;
  j["cancel"] = default_config(Experiment::cancel);
  j["faraday"] = default_config(Experiment::faraday);
  j["wb"] = default_config(Experiment::wb);
  j["sweep"] = default_config(Experiment::sweep);
  j["trajectory"] = default_config(Experiment::trajectory);
  return j;
}

nlohmann::ordered_json to_json(const RunConfig& c) {
  json j;
  j["experiment"] = experiment_name(c.experiment);
  j["out"] = c.out;
  j["format"] = c.format;
  j["solenoid"] = {{"radius_cm", c.solenoid.radius},
                   {"waveform", waveform_to_json(c.solenoid.waveform)}};
  j["loop"] = {{"rho_cm", c.loop.rho},         {"z0_cm", c.loop.z0},
               {"t0_s", c.loop.t0},            {"duration_s", c.loop.duration},
               {"direction", c.loop.direction}, {"n_events", c.loop.n_events}};
  j["interferometer"] = {{"D_cm", c.wb.d},
                         {"theta_rad", c.wb.theta},
                         {"lambda_cm", c.wb.lambda},
                         {"B0_gauss", c.wb.b0},
                         {"include_second_order", c.include_second_order}};
  j["waveform"] = waveform_to_json(c.waveform);
  j["sweep"] = {{"model", model_name(c.sweep.model)},
                {"n_samples", c.sweep.n_samples}};
  j["faraday"] = {{"rho_cm", c.faraday.rho}, {"t_s", c.faraday.t}};
  j["trajectory"] = {{"lambda_cm", c.trajectory.lambda},
                     {"B0_gauss", c.trajectory.b0},
                     {"turns", c.trajectory.turns},
                     {"dt_per_period", c.trajectory.dt_per_period},
                     {"n_samples", c.trajectory.n_samples}};
  j["numerics"] = {{"n_sub", c.numerics.n_sub},
                   {"t_panels", c.numerics.t_panels},
                   {"n_phi", c.numerics.n_phi},
                   {"n_r", c.numerics.n_r}};
  return j;
}

}  // namespace abfringe
