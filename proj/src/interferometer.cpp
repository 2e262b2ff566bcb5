#include "abfringe/interferometer.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "abfringe/constants.hpp"
#include "abfringe/errors.hpp"
#include "abfringe/fit.hpp"
#include "abfringe/trajectory.hpp"

namespace abfringe {

namespace {
constexpr double two_pi = 2.0 * constants::pi;

// Deltas smaller than this are dominated by rounding of the arc solve and
// are dropped from scaling fits.
constexpr double kDeltaFloor = 1e-12;

// Below this turn per leg the arcsine solve is pure roundoff (kappa * dx
// falls under one ulp of sin(entry)) while the straight chord is exact to
// O((kappa dx)^2) < 1e-26 relative, so such legs are treated as straight.
constexpr double kStraightTurn = 1e-13;
}  // namespace

void WBConfig::validate() const {
  if (!(d > 0.0) || !std::isfinite(d)) {
    throw ConfigError("crystal spacing must be positive");
  }
  if (!(theta > 0.0 && theta < constants::pi / 4.0)) {
    throw ConfigError("diffraction angle must lie in (0, pi/4)");
  }
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ConfigError("wavelength must be positive");
  }
  if (!std::isfinite(b0)) throw ConfigError("field must be finite");
}

double radius_of_curvature(double lambda, double b0) {
  if (!(lambda > 0.0)) throw ConfigError("wavelength must be positive");
  if (b0 == 0.0) {
    throw GeometryError(
        "radius_of_curvature: infinite at zero field; rays are straight");
  }
  return two_pi * constants::hbar * constants::c /
         (constants::e * lambda * std::abs(b0));
}

namespace {

// One leg from `start` with tangent `entry` to the plane x = plane_x, on an
// arc of signed curvature kappa (tangent angle grows by kappa per unit
// length). The principal arcsine picks the first forward crossing; an
// argument that leaves [-1, 1] means the arc turns back before the plane.
Leg solve_leg(const std::string& name, const Vec3& start, double entry,
              double plane_x, double kappa, double free_length) {
  const double dx = plane_x - start.x;
  Leg leg;
  leg.start = start;
  leg.entry_angle = entry;
  leg.free_length = free_length;
  if (!(dx > 0.0)) {
    throw GeometryError("build_geometry: leg " + name +
                        " starts at or beyond its crystal plane");
  }
  if (std::abs(kappa) * dx <= kStraightTurn) {
    const double cos_e = std::cos(entry);
    if (!(cos_e > 0.0)) {
      throw GeometryError("build_geometry: leg " + name +
                          " does not advance toward its crystal plane");
    }
    leg.length = dx / cos_e;
    leg.exit_angle = entry;
    leg.end = {plane_x, start.y + dx * std::tan(entry), 0.0};
  } else {
    const double arg = std::sin(entry) + kappa * dx;
    if (!(std::abs(arg) < 1.0)) {
      throw GeometryError("build_geometry: leg " + name +
                          " cannot reach its crystal plane "
                          "(field too strong for this spacing)");
    }
    const double psi = std::asin(arg);
    leg.exit_angle = psi;
    leg.length = (psi - entry) / kappa;
    if (!(leg.length > 0.0)) {
      throw GeometryError("build_geometry: leg " + name +
                          " has a non-positive arc length");
    }
    leg.end = {plane_x,
               start.y - (std::cos(psi) - std::cos(entry)) / kappa, 0.0};
  }
  leg.delta = leg.length - free_length;
  return leg;
}

}  // namespace

PathSet build_geometry(const WBConfig& cfg) {
  cfg.validate();
  const double p = momentum_from_wavelength(cfg.lambda);
  // Signed curvature for charge -e: an electron moving along +x in a +z
  // field is pushed toward +y, so positive b0 curls the beam left.
  const double kappa =
      cfg.b0 == 0.0 ? 0.0 : constants::e * cfg.b0 / (p * constants::c);
  const double skew = 2.0 * cfg.theta;
  const double free_skew = cfg.d / std::cos(skew);

  PathSet out;
  const Vec3 origin{0.0, 0.0, 0.0};
  out.l1 = solve_leg("l1", origin, 0.0, cfg.d, kappa, cfg.d);
  out.l2 = solve_leg("l2", out.l1.end, out.l1.exit_angle + skew, 2.0 * cfg.d,
                     kappa, free_skew);
  out.m1 = solve_leg("m1", origin, skew, cfg.d, kappa, free_skew);
  out.m2 = solve_leg("m2", out.m1.end, out.m1.exit_angle - skew, 2.0 * cfg.d,
                     kappa, cfg.d);
  out.enclosed_area = 2.0 * cfg.d * cfg.d * std::tan(cfg.theta);
  out.path_length_difference = (out.l1.length + out.l2.length) -
                               (out.m1.length + out.m2.length);
  return out;
}

ScalingExponents scaling_exponents(const WBConfig& cfg,
                                   std::span<const double> b_grid) {
  cfg.validate();
  std::vector<double> bs, dl1, dl2, dm1, dm2;
  bs.reserve(b_grid.size());
  for (double b : b_grid) {
    if (!(b > 0.0)) {
      throw ConfigError("scaling_exponents needs positive grid fields");
    }
    WBConfig c = cfg;
    c.b0 = b;
    const PathSet ps = build_geometry(c);
    bs.push_back(b);
    dl1.push_back(ps.l1.delta);
    dl2.push_back(ps.l2.delta);
    dm1.push_back(ps.m1.delta);
    dm2.push_back(ps.m2.delta);
  }
  ScalingExponents out;
  out.l1 = fit_loglog(bs, dl1, kDeltaFloor).slope;
  out.l2 = fit_loglog(bs, dl2, kDeltaFloor).slope;
  out.m1 = fit_loglog(bs, dm1, kDeltaFloor).slope;
  out.m2 = fit_loglog(bs, dm2, kDeltaFloor).slope;
  return out;
}

double scaling_exponent_in_d(const WBConfig& cfg,
                             std::span<const double> d_grid) {
  cfg.validate();
  std::vector<double> ds, dl2;
  ds.reserve(d_grid.size());
  for (double d : d_grid) {
    if (!(d > 0.0)) {
      throw ConfigError("scaling_exponent_in_d needs positive spacings");
    }
    WBConfig c = cfg;
    c.d = d;
    ds.push_back(d);
    dl2.push_back(build_geometry(c).l2.delta);
  }
  return fit_loglog(ds, dl2, kDeltaFloor).slope;
}

PhaseReport phase_report(const WBConfig& cfg, bool include_second_order) {
  cfg.validate();
  PhaseReport out;
  if (cfg.b0 == 0.0) {
    out.regime_ok = true;  // straight rays, no bending at all
    return out;
  }
  const PathSet ps = build_geometry(cfg);
  out.d_over_r = cfg.d / radius_of_curvature(cfg.lambda, cfg.b0);
  // Flux phase around route l forward and route m reversed; that loop is
  // positively oriented about +z, and the electron charge is -e, hence the
  // minus sign. It opposes the path-length term below, which is what makes
  // the fringes nearly stationary.
  out.ab_phase = -constants::phase_per_flux * cfg.b0 * ps.enclosed_area;
  const double pld = include_second_order ? ps.path_length_difference
                                          : ps.l2.delta - ps.m1.delta;
  out.dynamical_phase = (two_pi / cfg.lambda) * pld;
  out.net_phase = out.ab_phase + out.dynamical_phase;
  out.regime_ok = out.d_over_r < cfg.theta / 10.0;
  out.regime_marginal = !out.regime_ok && out.d_over_r < cfg.theta;
  return out;
}

FringeSeries fringe_time_series(const WBConfig& cfg, const Waveform& waveform,
                                int n_samples, FringeModel model,
                                int threads) {
  cfg.validate();
  waveform.validate();
  if (n_samples < 2) {
    throw ConfigError("fringe_time_series needs at least 2 samples");
  }
  const double period =
      waveform.kind == WaveformKind::sinusoid ? 1.0 / waveform.freq_hz : 1.0;
  const double area = 2.0 * cfg.d * cfg.d * std::tan(cfg.theta);

  FringeSeries out;
  out.samples.resize(static_cast<std::size_t>(n_samples));
  const auto eval_one = [&](int i) {
    FringeSample smp;
    smp.t = period * static_cast<double>(i) / n_samples;
    smp.b = waveform.value(smp.t);
    switch (model) {
      case FringeModel::naive_ab:
        smp.phase = -constants::phase_per_flux * smp.b * area;
        break;
      case FringeModel::full_cancellation:
        // The time-dependent part cancels identically; only the static
        // field leaves a (fixed) flux phase.
        smp.phase = -constants::phase_per_flux * waveform.b_static * area;
        break;
      case FringeModel::werner_brill: {
        WBConfig c = cfg;
        c.b0 = smp.b;
        try {
          smp.phase = phase_report(c, true).net_phase;
        } catch (const GeometryError&) {
          smp.solvable = false;
        }
        break;
      }
    }
    out.samples[static_cast<std::size_t>(i)] = smp;
  };

  const int workers = std::clamp(threads, 1, n_samples);
  if (workers == 1) {
    for (int i = 0; i < n_samples; ++i) eval_one(i);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int i = w; i < n_samples; i += workers) eval_one(i);
      });
    }
    for (auto& th : pool) th.join();
  }

  double lo = 0.0, hi = 0.0;
  bool have = false;
  for (const auto& smp : out.samples) {
    if (!smp.solvable) {
      ++out.skipped;
      continue;
    }
    if (!have) {
      lo = hi = smp.phase;
      have = true;
    } else {
      lo = std::min(lo, smp.phase);
      hi = std::max(hi, smp.phase);
    }
  }
  out.peak_to_peak = have ? hi - lo : 0.0;
  return out;
}

}  // namespace abfringe
