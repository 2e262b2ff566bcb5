#include "abfringe/phase.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "abfringe/constants.hpp"
#include "abfringe/errors.hpp"
#include "abfringe/quadrature.hpp"

namespace abfringe {

namespace {

constexpr double two_pi = 2.0 * constants::pi;

// Reference polygon sizes for the internal Stokes cross-check. Outside the
// wall the polygon line integral equals the disk flux exactly (the polygon
// contains the whole flux tube), so a modest polygon suffices; inside, the
// polygon-vs-disk area deficit scales as (2 pi / N)^2 / 6 and N must be
// large enough to push it below the 1e-8 agreement tolerance.
constexpr int kCheckNOutside = 4096;
constexpr int kCheckNInside = 81920;
constexpr double kStokesTol = 1e-8;

double polygon_phase(const VecField& a_field, const TimedPath& poly,
                     int n_sub) {
  return constants::phase_per_flux * line_integral(a_field, poly, n_sub).value;
}

}  // namespace

void LoopSpec::validate(const Solenoid& s) const {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw GeometryError("loop radius must be positive and finite");
  }
  if (!(duration >= 0.0) || !std::isfinite(duration)) {
    throw GeometryError("loop duration must be >= 0");
  }
  if (direction != 1 && direction != -1) {
    throw GeometryError("loop direction must be +1 or -1");
  }
  if (n_events < 3) throw GeometryError("loop needs at least 3 chords");
  if (rho >= s.radius) {
    // The discretized loop must clear the wall everywhere, or chords would
    // cut through the field discontinuity.
    const double inradius = rho * std::cos(constants::pi / n_events);
    if (!(inradius > s.radius)) {
      throw GeometryError(
          "loop polygon crosses the solenoid wall; increase n_events or "
          "move the loop radius away from the wall");
    }
  }
}

TimedPath LoopSpec::path() const {
  return circle_loop(rho, z0, t0, duration, direction, n_events);
}

double electric_phase(const LoopSpec& loop, const Solenoid& s,
                      const QuadratureSpec& q) {
  s.validate();
  loop.validate(s);
  if (q.n_sub < 1 || q.t_panels < 1) {
    throw NumericsError("electric_phase needs positive quadrature controls");
  }
  const double t_end = loop.t0 + loop.duration;
  const double t_ref = s.waveform.switch_on_reference(loop.t0);
  if (t_ref == t_end) return 0.0;
  const TimedPath poly = loop.path();
  // EMF around the loop at a frozen time; the polygon nodes are exactly the
  // ones the magnetic term uses, so the two phases share every spatial
  // quadrature weight and their analytic cancellation survives roundoff.
  const auto emf_at = [&](double t) {
    const VecField e_frozen = [&s, t](const Vec3& x, double) {
      return electric_field(s, x, t);
    };
    return line_integral(e_frozen, poly, q.n_sub).value;
  };
  const double emf_time_integral = simpson(emf_at, t_ref, t_end, q.t_panels);
  return constants::phase_per_flux * constants::c * emf_time_integral;
}

double magnetic_flux_phase(const LoopSpec& loop, const Solenoid& s,
                           double t_eval, const QuadratureSpec& q) {
  s.validate();
  loop.validate(s);
  if (q.n_sub < 1) {
    throw NumericsError("magnetic_flux_phase needs n_sub >= 1");
  }
  const VecField a_frozen = [&s, t_eval](const Vec3& x, double) {
    return vector_potential(s, x, t_eval);
  };
  const double line_phase = polygon_phase(a_frozen, loop.path(), q.n_sub);

  // Cross-check the two Stokes routes on a reference discretization: the
  // loop integral of A against the disk flux of B (split at the wall).
  const bool inside = loop.rho < s.radius;
  const int check_n = inside ? kCheckNInside : kCheckNOutside;
  const TimedPath check_poly =
      circle_loop(loop.rho, loop.z0, t_eval, 0.0, loop.direction, check_n);
  const double check_line =
      constants::phase_per_flux *
      line_integral(a_frozen, check_poly, 2).value;
  const VecField b_frozen = [&s, t_eval](const Vec3& x, double) {
    return magnetic_field(s, x, t_eval);
  };
  const Disk disk{{0.0, 0.0, loop.z0},
                  {0.0, 0.0, static_cast<double>(loop.direction)},
                  loop.rho};
  const double breaks[] = {s.radius};
  const double surf_phase =
      constants::phase_per_flux *
      surface_flux(b_frozen, disk, t_eval, 64, 64, breaks);
  const double scale = std::max(std::abs(check_line), std::abs(surf_phase));
  if (scale > 0.0 && std::abs(check_line - surf_phase) > kStokesTol * scale) {
    throw NumericsError(
        "magnetic_flux_phase: line and surface flux routes disagree by " +
        std::to_string(std::abs(check_line - surf_phase) / scale) +
        " relative");
  }
  return line_phase;
}

PhaseBreakdown total_phase(const LoopSpec& loop, const Solenoid& s,
                           const QuadratureSpec& q) {
  PhaseBreakdown out;
  out.electric = electric_phase(loop, s, q);
  out.magnetic = magnetic_flux_phase(loop, s, loop.t0, q);
  out.total = out.electric + out.magnetic;
  // The static part rides the same polygon and weights; the residual then
  // measures only genuine time dependence, not quadrature mismatch.
  const TimedPath poly = loop.path();
  const VecField a_static = [&s, &loop](const Vec3& x, double) {
    return static_time_split(s, x, loop.t0).static_part;
  };
  out.static_part = polygon_phase(a_static, poly, q.n_sub);
  out.time_dependent_residual = out.total - out.static_part;
  return out;
}

FaradayCheck faraday_check(double rho, const Solenoid& s, double t, int n_phi,
                           int n_r) {
  s.validate();
  if (!(rho > 0.0)) {
    throw GeometryError("faraday_check needs a positive circle radius");
  }
  FaradayCheck out;
  // EMF on the exact circle: the azimuthal integrand is constant, so the
  // periodic Simpson rule is exact and the residual probes only the field
  // model, not the discretization.
  const auto integrand = [&](double phi) {
    const Vec3 pos{rho * std::cos(phi), rho * std::sin(phi), 0.0};
    const Vec3 tangent{-rho * std::sin(phi), rho * std::cos(phi), 0.0};
    return dot(electric_field(s, pos, t), tangent);
  };
  out.emf = simpson(integrand, 0.0, two_pi, n_phi);

  // d/dt of the flux, using the analytic waveform rate under the integral.
  const VecField b_rate = [&s, t](const Vec3& x, double) {
    if (rho_xy(x) < s.radius) return Vec3{0.0, 0.0, s.waveform.d_dt(t)};
    return Vec3{0.0, 0.0, 0.0};
  };
  const Disk disk{{0.0, 0.0, 0.0}, {0.0, 0.0, 1.0}, rho};
  const double breaks[] = {s.radius};
  const double flux_rate = surface_flux(b_rate, disk, t, n_r, n_phi, breaks);
  out.flux_rate_term = flux_rate / constants::c;
  out.residual = out.emf + out.flux_rate_term;
  return out;
}

InfinitesimalPhase infinitesimal_phase(double rho, double dphi, double dt,
                                       const Solenoid& s, double t) {
  s.validate();
  if (!(rho >= s.radius)) {
    throw GeometryError(
        "infinitesimal_phase expects the loop radius at or outside the wall");
  }
  InfinitesimalPhase out;
  // phi_hat at (rho, 0, 0) is +y; E is purely azimuthal there.
  const double e_phi =
      electric_field(s, {rho, 0.0, 0.0}, t).y;
  out.electric_piece =
      constants::phase_per_flux * e_phi * (rho * dphi) * (constants::c * dt);
  out.magnetic_piece = constants::phase_per_flux *
                       (dphi * s.radius * s.radius / 2.0) *
                       s.waveform.d_dt(t) * dt;
  out.sum = out.electric_piece + out.magnetic_piece;
  return out;
}

}  // namespace abfringe
