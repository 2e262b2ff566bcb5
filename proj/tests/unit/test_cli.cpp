// End-to-end tests of the command line binary, driven through popen. The
// binary path is injected by the build as ABFRINGE_CLI_PATH.
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

struct CliResult {
  int code = -1;
  std::string out;  // stdout and stderr interleaved
};

CliResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string(ABFRINGE_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string run_with_env(const std::string& env, const std::string& args) {
  const std::string cmd =
      env + " " + std::string(ABFRINGE_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  pclose(pipe);
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("identical configs give byte-identical output") {
  auto a = run_cli("wb");
  auto b = run_cli("wb");
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  CHECK(a.out == b.out);
  // and through a file, where the echoed config is also identical
  auto c = run_cli("sweep --set sweep.n_samples=24 --out cli_det.csv");
  REQUIRE(c.code == 0);
  const std::string first = slurp("cli_det.csv");
  auto d = run_cli("sweep --set sweep.n_samples=24 --out cli_det.csv");
  REQUIRE(d.code == 0);
  CHECK(slurp("cli_det.csv") == first);
}

TEST_CASE("thread count does not change sweep output bytes") {
  const std::string args = "sweep --set sweep.n_samples=40";
  const std::string one = run_with_env("ABFRINGE_THREADS=1", args);
  const std::string four = run_with_env("ABFRINGE_THREADS=4", args);
  CHECK(one == four);
  CHECK(one.find("phase[rad]") != std::string::npos);
}

TEST_CASE("the wb report carries the reference gyroradius") {
  auto r = run_cli("wb");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("R[cm]") != std::string::npos);
  CHECK(r.out.find("8.510408523996e+02") != std::string::npos);
}

TEST_CASE("set overrides reach the physics") {
  auto r = run_cli("wb --set interferometer.B0_gauss=5");
  REQUIRE(r.code == 0);
  // D/R at 5 G is about 2.94e-2
  CHECK(r.out.find("2.937579310031e-02") != std::string::npos);
}

TEST_CASE("json output parses and echoes the config") {
  auto r = run_cli("wb --format json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["meta"]["experiment"] == "wb");
  CHECK(j["meta"]["config"]["interferometer"]["D_cm"] == 5.0);
  CHECK(j["rows"] == 1);
  bool saw_area = false;
  for (const auto& col : j["columns"]) {
    if (col["name"] == "enclosed_area") {
      saw_area = true;
      CHECK(col["unit"] == "cm^2");
    }
  }
  CHECK(saw_area);
}

TEST_CASE("defaults emits configs that run back through the parser") {
  auto r = run_cli("defaults --out cli_defaults.json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(slurp("cli_defaults.json"));
  for (const char* name :
       {"cancel", "faraday", "wb", "sweep", "trajectory"}) {
    REQUIRE(j.contains(name));
    std::ofstream out("cli_one_default.json", std::ios::binary);
    out << j[name].dump(2);
    out.close();
    std::string args = std::string(name) + " --config cli_one_default.json";
    if (std::string(name) == "sweep") args += " --set sweep.n_samples=16";
    if (std::string(name) == "trajectory")
      args += " --set trajectory.n_samples=8 --set trajectory.dt_per_period=1e-3";
    auto run = run_cli(args + " --out cli_default_run.csv");
    CHECK(run.code == 0);
  }
}

TEST_CASE("unknown config keys are rejected with exit code 2") {
  std::ofstream out("cli_bad_key.json", std::ios::binary);
  out << R"({"experiment":"wb","interferometer":{"D_cm":5.0,"B0_gauss":1.0,)"
      << R"("typo_key":3}})";
  out.close();
  auto r = run_cli("wb --config cli_bad_key.json");
  CHECK(r.code == 2);
  CHECK(r.out.find("config error") != std::string::npos);
  CHECK(r.out.find("typo_key") != std::string::npos);
}

TEST_CASE("missing config file is a config error") {
  auto r = run_cli("wb --config does_not_exist_anywhere.json");
  CHECK(r.code == 2);
}

TEST_CASE("invalid flag values are usage errors") {
  auto r = run_cli("wb --format yaml");
  CHECK(r.code == 2);
}

TEST_CASE("impossible geometry exits with code 3") {
  auto r = run_cli("cancel --set loop.rho_cm=1.001 --set loop.n_events=8");
  CHECK(r.code == 3);
  CHECK(r.out.find("geometry error") != std::string::npos);
  auto r2 = run_cli("wb --set interferometer.B0_gauss=500");
  CHECK(r2.code == 3);
}

TEST_CASE("cancel run reports a tiny residual ratio in csv") {
  auto r = run_cli("cancel --out cli_cancel.csv");
  REQUIRE(r.code == 0);
  const std::string csv = slurp("cli_cancel.csv");
  CHECK(csv.find("time_dependent_residual[rad]") != std::string::npos);
  // last column of the single data row is the residual ratio
  const auto last_comma = csv.rfind(',');
  REQUIRE(last_comma != std::string::npos);
  const double ratio = std::stod(csv.substr(last_comma + 1));
  CHECK(ratio <= 1e-10);
}
