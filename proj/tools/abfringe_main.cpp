#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "abfringe/config.hpp"
#include "abfringe/errors.hpp"
#include "abfringe/runner.hpp"

namespace {

struct CommonFlags {
  std::string config_path;
  std::string out;
  std::string format;
  std::vector<std::string> sets;
};

void add_common(CLI::App* sub, CommonFlags& flags) {
  sub->add_option("--config", flags.config_path,
                  "JSON config file (defaults used when omitted)");
  sub->add_option("--out", flags.out, "output path, '-' for stdout");
  sub->add_option("--format", flags.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--set", flags.sets,
                  "override a config value, dotted.key=value (repeatable)")
      ->type_size(1);
}

int run_one(abfringe::Experiment experiment, const CommonFlags& flags) {
  abfringe::RunConfig cfg =
      abfringe::load_config(flags.config_path, flags.sets, experiment);
  if (!flags.out.empty()) cfg.out = flags.out;
  if (!flags.format.empty()) cfg.format = flags.format;
  const abfringe::ResultTable table = abfringe::run_experiment(cfg);
  table.write(cfg.out, cfg.format);
  return 0;
}

int emit_defaults(const std::string& out) {
  const std::string payload = abfringe::all_default_configs().dump(2) + "\n";
  if (out.empty() || out == "-") {
    std::cout << payload;
    return 0;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw abfringe::ConfigError("cannot open output file '" + out + "'");
  f << payload;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Time-dependent flux-phase cancellation and three-crystal electron "
      "interferometer calculations (Gaussian CGS units)"};
  app.require_subcommand(1);

  struct SubSpec {
    abfringe::Experiment experiment;
    const char* name;
    const char* help;
  };
  const SubSpec specs[] = {
      {abfringe::Experiment::cancel, "cancel",
       "phase breakdown of a timed loop around the solenoid"},
      {abfringe::Experiment::faraday, "faraday",
       "EMF vs flux-rate identity on a coaxial circle"},
      {abfringe::Experiment::wb, "wb",
       "interferometer geometry and phases in a static uniform field"},
      {abfringe::Experiment::sweep,
       "sweep", "fringe phase over one period of a time-varying field"},
      {abfringe::Experiment::trajectory, "trajectory",
       "integrated electron orbit in a uniform field"},
  };

  CommonFlags flags[5];
  CLI::App* subs[5];
  for (int i = 0; i < 5; ++i) {
    subs[i] = app.add_subcommand(specs[i].name, specs[i].help);
    add_common(subs[i], flags[i]);
  }

  std::string defaults_out;
  CLI::App* defaults_cmd = app.add_subcommand(
      "defaults", "print one ready-to-edit config per experiment (JSON)");
  defaults_cmd->add_option("--out", defaults_out,
                           "output path, '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (defaults_cmd->parsed()) return emit_defaults(defaults_out);
    for (int i = 0; i < 5; ++i) {
      if (subs[i]->parsed()) return run_one(specs[i].experiment, flags[i]);
    }
    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const abfringe::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const abfringe::GeometryError& e) {
    std::cerr << "geometry error: " << e.what() << "\n";
    return 3;
  } catch (const abfringe::NumericsError& e) {
    std::cerr << "numerics error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
