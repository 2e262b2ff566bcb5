#include "abfringe/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "abfringe/constants.hpp"
#include "abfringe/errors.hpp"
#include "abfringe/fit.hpp"
#include "abfringe/interferometer.hpp"
#include "abfringe/phase.hpp"
#include "abfringe/trajectory.hpp"

namespace abfringe {

namespace {

constexpr const char* kVersion = "0.1.0";

std::string fringe_model_name(FringeModel m) {
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

ResultTable make_table(const RunConfig& cfg) {
  ResultTable t;
  t.set_meta("tool", "abfringe");
  t.set_meta("version", kVersion);
  t.set_meta("experiment", experiment_name(cfg.experiment));
  t.set_meta("config", to_json(cfg));
  t.set_meta("constants",
             nlohmann::ordered_json{{"hbar_erg_s", constants::hbar},
                                    {"c_cm_per_s", constants::c},
                                    {"e_esu", constants::e},
                                    {"m_e_g", constants::m_e}});
  return t;
}

double safe_ratio(double num, double den) {
  return den != 0.0 ? std::abs(num / den) : 0.0;
}

ResultTable run_cancel(const RunConfig& cfg) {
  ResultTable t = make_table(cfg);
  const QuadratureSpec q{cfg.numerics.n_sub, cfg.numerics.t_panels};
  const PhaseBreakdown b = total_phase(cfg.loop, cfg.solenoid, q);
  t.add_column("electric", "rad");
  t.add_column("magnetic", "rad");
  t.add_column("total", "rad");
  t.add_column("static_part", "rad");
  t.add_column("time_dependent_residual", "rad");
  t.add_column("residual_ratio", "1");
  const double varying = b.magnetic - b.static_part;
  t.push_row({b.electric, b.magnetic, b.total, b.static_part,
              b.time_dependent_residual,
              safe_ratio(b.time_dependent_residual, varying)});
  return t;
}

ResultTable run_faraday(const RunConfig& cfg) {
  ResultTable t = make_table(cfg);
  const FaradayCheck fc =
      faraday_check(cfg.faraday.rho, cfg.solenoid, cfg.faraday.t,
                    cfg.numerics.n_phi, cfg.numerics.n_r);
  t.add_column("emf", "statvolt");
  t.add_column("flux_rate_term", "statvolt");
  t.add_column("residual", "statvolt");
  t.add_column("residual_ratio", "1");
  t.push_row({fc.emf, fc.flux_rate_term, fc.residual,
              safe_ratio(fc.residual, fc.emf)});
  return t;
}

ResultTable run_wb(const RunConfig& cfg) {
  ResultTable t = make_table(cfg);
  const PathSet ps = build_geometry(cfg.wb);
  const PhaseReport rep = phase_report(cfg.wb, cfg.include_second_order);
  // 0 stands in for the infinite zero-field radius to keep the row numeric.
  const double r =
      cfg.wb.b0 != 0.0 ? radius_of_curvature(cfg.wb.lambda, cfg.wb.b0) : 0.0;
  t.add_column("R", "cm");
  t.add_column("D_over_R", "1");
  t.add_column("ab_phase", "rad");
  t.add_column("dynamical_phase", "rad");
  t.add_column("net_phase", "rad");
  t.add_column("net_over_ab", "1");
  t.add_column("regime_ok", "flag");
  t.add_column("regime_marginal", "flag");
  t.add_column("l1", "cm");
  t.add_column("l2", "cm");
  t.add_column("m1", "cm");
  t.add_column("m2", "cm");
  t.add_column("delta_l1", "cm");
  t.add_column("delta_l2", "cm");
  t.add_column("delta_m1", "cm");
  t.add_column("delta_m2", "cm");
  t.add_column("path_length_difference", "cm");
  t.add_column("enclosed_area", "cm^2");
  t.push_row({r, rep.d_over_r, rep.ab_phase, rep.dynamical_phase,
              rep.net_phase, safe_ratio(rep.net_phase, rep.ab_phase),
              rep.regime_ok ? 1.0 : 0.0, rep.regime_marginal ? 1.0 : 0.0,
              ps.l1.length, ps.l2.length, ps.m1.length, ps.m2.length,
              ps.l1.delta, ps.l2.delta, ps.m1.delta, ps.m2.delta,
              ps.path_length_difference, ps.enclosed_area});
  return t;
}

ResultTable run_sweep(const RunConfig& cfg) {
  ResultTable t = make_table(cfg);
  const FringeSeries fs =
      fringe_time_series(cfg.wb, cfg.waveform, cfg.sweep.n_samples,
                         cfg.sweep.model, worker_count());
  t.set_meta("model", fringe_model_name(cfg.sweep.model));
  t.set_meta("peak_to_peak_rad", fs.peak_to_peak);
  t.set_meta("skipped_samples", fs.skipped);
  t.add_column("t", "s");
  t.add_column("B", "G");
  t.add_column("phase", "rad");
  t.add_column("solvable", "flag");
  for (const auto& smp : fs.samples) {
    t.push_row({smp.t, smp.b, smp.phase, smp.solvable ? 1.0 : 0.0});
  }
  return t;
}

ResultTable run_trajectory(const RunConfig& cfg) {
  ResultTable t = make_table(cfg);
  const auto& tc = cfg.trajectory;
  const double p = momentum_from_wavelength(tc.lambda);
  const double period = gyro_period(p, tc.b0);
  const double dt = tc.dt_per_period * period;
  const long n_steps =
      std::max<long>(1, std::lround(tc.turns * period / dt));
  const long stride =
      std::max<long>(1, n_steps / std::max(1, tc.n_samples - 1));
  ElectronState start;
  start.p = {p, 0.0, 0.0};
  const Trajectory tr =
      integrate(start, uniform_b_sampler(tc.b0), dt, n_steps, stride);

  std::vector<double> xs, ys;
  xs.reserve(tr.states.size());
  ys.reserve(tr.states.size());
  for (const auto& s : tr.states) {
    xs.push_back(s.x.x);
    ys.push_back(s.x.y);
  }
  const CircleFit cf = fit_circle_xy(xs, ys);

  t.set_meta("pc_kev", p * constants::c / constants::erg_per_kev);
  t.set_meta("speed_over_c", speed(p) / constants::c);
  t.set_meta("gyro_period_s", period);
  t.set_meta("expected_radius_cm",
             p * constants::c / (constants::e * std::abs(tc.b0)));
  t.set_meta("fitted_radius_cm", cf.r);
  t.set_meta("aborted", tr.aborted);
  t.add_column("t", "s");
  t.add_column("x", "cm");
  t.add_column("y", "cm");
  t.add_column("z", "cm");
  t.add_column("px", "g_cm_per_s");
  t.add_column("py", "g_cm_per_s");
  t.add_column("pz", "g_cm_per_s");
  t.add_column("path_length", "cm");
  for (const auto& s : tr.states) {
    t.push_row({s.t, s.x.x, s.x.y, s.x.z, s.p.x, s.p.y, s.p.z,
                s.path_length});
  }
  return t;
}

}  // namespace

int worker_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  int workers = std::min(hw, 8);
  if (const char* env = std::getenv("ABFRINGE_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || cap < 1) {
      throw ConfigError("ABFRINGE_THREADS must be a positive integer");
    }
    workers = static_cast<int>(std::min<long>(workers, cap));
  }
  return workers;
}

ResultTable run_experiment(const RunConfig& cfg) {
  cfg.validate();
  switch (cfg.experiment) {
    case Experiment::cancel:
      return run_cancel(cfg);
    case Experiment::faraday:
      return run_faraday(cfg);
    case Experiment::wb:
      return run_wb(cfg);
    case Experiment::sweep:
      return run_sweep(cfg);
    case Experiment::trajectory:
      return run_trajectory(cfg);
  }
  throw ConfigError("unknown experiment");
}

}  // namespace abfringe
