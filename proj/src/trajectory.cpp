#include "abfringe/trajectory.hpp"

#include <algorithm>
#include <cmath>

#include "abfringe/constants.hpp"
#include "abfringe/errors.hpp"

namespace abfringe {

namespace {
constexpr double two_pi = 2.0 * constants::pi;
}

double momentum_from_wavelength(double lambda) {
  if (!(lambda > 0.0)) throw ConfigError("wavelength must be positive");
  return constants::planck_h / lambda;
}

double pc_from_kinetic(double kinetic) {
  if (!(kinetic > 0.0)) throw ConfigError("kinetic energy must be positive");
  return std::sqrt(kinetic * kinetic + 2.0 * kinetic * constants::mc2);
}

double total_energy(double p) {
  const double pc = p * constants::c;
  return std::sqrt(pc * pc + constants::mc2 * constants::mc2);
}

double speed(double p) {
  return p * constants::c * constants::c / total_energy(p);
}

double gyro_period(double p, double b) {
  if (b == 0.0) throw GeometryError("gyro period undefined in zero field");
  return two_pi * total_energy(p) /
         (constants::e * std::abs(b) * constants::c);
}

EMSampler uniform_b_sampler(double b0) {
  return [b0](const Vec3&, double) {
    return std::make_pair(Vec3{0.0, 0.0, 0.0}, Vec3{0.0, 0.0, b0});
  };
}

namespace {

struct Deriv {
  Vec3 dx;
  Vec3 dp;
  double dlen = 0.0;
};

Deriv deriv(const EMSampler& fields, const Vec3& x, const Vec3& p, double t) {
  const double etot = total_energy(norm(p));
  const Vec3 v = p * (constants::c * constants::c / etot);
  const auto [ef, bf] = fields(x, t);
  const Vec3 force = -constants::e * (ef + cross(v, bf) / constants::c);
  return {v, force, norm(v)};
}

ElectronState rk4_step(const EMSampler& fields, const ElectronState& s,
                       double dt) {
  const Deriv k1 = deriv(fields, s.x, s.p, s.t);
  const Deriv k2 = deriv(fields, s.x + (0.5 * dt) * k1.dx,
                         s.p + (0.5 * dt) * k1.dp, s.t + 0.5 * dt);
  const Deriv k3 = deriv(fields, s.x + (0.5 * dt) * k2.dx,
                         s.p + (0.5 * dt) * k2.dp, s.t + 0.5 * dt);
  const Deriv k4 =
      deriv(fields, s.x + dt * k3.dx, s.p + dt * k3.dp, s.t + dt);
  ElectronState next;
  next.x = s.x + (dt / 6.0) * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx);
  next.p = s.p + (dt / 6.0) * (k1.dp + 2.0 * k2.dp + 2.0 * k3.dp + k4.dp);
  next.t = s.t + dt;
  next.path_length =
      s.path_length +
      (dt / 6.0) * (k1.dlen + 2.0 * k2.dlen + 2.0 * k3.dlen + k4.dlen);
  return next;
}

bool state_finite(const ElectronState& s) {
  return finite(s.x) && finite(s.p) && std::isfinite(s.t) &&
         std::isfinite(s.path_length);
}

}  // namespace

Trajectory integrate(const ElectronState& start, const EMSampler& fields,
                     double dt, long n_steps, long sample_stride) {
  if (!(dt > 0.0)) throw NumericsError("integrate needs dt > 0");
  if (n_steps < 1) throw NumericsError("integrate needs n_steps >= 1");
  if (sample_stride < 1) {
    throw NumericsError("integrate needs sample_stride >= 1");
  }
  if (!(norm(start.p) > 0.0)) {
    throw NumericsError("integrate needs a nonzero momentum");
  }
  Trajectory out;
  out.states.push_back(start);
  ElectronState s = start;
  for (long i = 1; i <= n_steps; ++i) {
    const ElectronState next = rk4_step(fields, s, dt);
    if (!state_finite(next)) {
      out.aborted = true;
      break;
    }
    s = next;
    if (i % sample_stride == 0) out.states.push_back(s);
  }
  if (!out.aborted && n_steps % sample_stride != 0) out.states.push_back(s);
  return out;
}

double leg_length(const Vec3& start, double entry_angle, double plane_x,
                  double lambda, double b0, double dt_frac) {
  if (!(dt_frac > 0.0)) throw NumericsError("leg_length needs dt_frac > 0");
  const double p = momentum_from_wavelength(lambda);
  const double v = speed(p);
  const double dx = plane_x - start.x;
  if (!(dx > 0.0)) {
    throw GeometryError("leg plane must lie ahead of the start point");
  }
  ElectronState s;
  s.x = start;
  s.p = {p * std::cos(entry_angle), p * std::sin(entry_angle), 0.0};
  const EMSampler fields = uniform_b_sampler(b0);

  const double transit = dx / (v * std::max(0.1, std::cos(entry_angle)));
  double dt = b0 != 0.0 ? dt_frac * gyro_period(p, b0) : dt_frac * transit;
  dt = std::min(dt, transit / 32.0);

  const long max_steps = static_cast<long>(20.0 * transit / dt) + 1000;
  for (long i = 0; i < max_steps; ++i) {
    const ElectronState next = rk4_step(fields, s, dt);
    if (!state_finite(next)) {
      throw NumericsError("leg_length integration produced a non-finite state");
    }
    if (next.x.x >= plane_x) {
      // Bisect the final substep down to rounding on the crossing time.
      double lo = 0.0;
      double hi = dt;
      for (int it = 0; it < 200 && hi - lo > dt * 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (rk4_step(fields, s, mid).x.x >= plane_x) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      return rk4_step(fields, s, 0.5 * (lo + hi)).path_length;
    }
    if (next.p.x <= 0.0) {
      throw GeometryError(
          "leg_length: the trajectory turned back before the plane "
          "(field too strong for this span)");
    }
    s = next;
  }
  throw NumericsError("leg_length exceeded its step budget");
}

}  // namespace abfringe
