#pragma once

#include "abfringe/fields.hpp"
#include "abfringe/path.hpp"

namespace abfringe {

// Circular interference loop around the solenoid axis, traversed between t0
// and t0 + duration at uniform angular speed. duration = 0 describes an
// effectively instantaneous traversal, the limit in which the cancellation
// between the electric and magnetic contributions is exact for any waveform.
struct LoopSpec {
  double rho = 1.0;      // cm
  double z0 = 0.0;       // cm
  double t0 = 0.0;       // s
  double duration = 0.0;  // s, >= 0
  int direction = +1;    // +1 counterclockwise seen from +z, -1 clockwise
  int n_events = 256;    // polygon resolution of the discretized loop

  void validate(const Solenoid& s) const;
  TimedPath path() const;
};

// Quadrature controls for the phase functionals.
struct QuadratureSpec {
  int n_sub = 4;      // Simpson panels per polygon chord
  int t_panels = 128;  // Simpson panels for the time integration
};

// Electric contribution to the interference phase,
//
//   (e / hbar c) * c * Integral_{t_ref}^{t0+duration} [ Loop E . dx ] dt,
//
// the loop EMF integrated over time from the waveform's switch-on reference
// (where the time-varying field vanishes) to the end of the traversal. By
// Faraday's law this equals -(e / hbar c) times the accumulated change of
// flux through the loop, i.e. exactly minus the time-varying part of the
// flux phase at the end of the traversal. rad.
double electric_phase(const LoopSpec& loop, const Solenoid& s,
                      const QuadratureSpec& q = {});

// Magnetic flux phase (e / hbar c) * Loop A(x, t_eval) . dx, computed along
// the loop and cross-checked against the surface integral of B over the
// spanning disk. The two routes must agree to 1e-8 relative or a
// NumericsError is thrown. Returns the line-route value, rad.
double magnetic_flux_phase(const LoopSpec& loop, const Solenoid& s,
                           double t_eval, const QuadratureSpec& q = {});

struct PhaseBreakdown {
  double electric = 0.0;     // rad, EMF term accumulated since switch-on
  double magnetic = 0.0;     // rad, flux phase at t0
  double total = 0.0;        // rad, electric + magnetic
  double static_part = 0.0;  // rad, flux phase of the static field alone
  double time_dependent_residual = 0.0;  // rad, total - static_part
};

// Full phase breakdown for a loop. The electric and magnetic terms use the
// same polygon and the same spatial quadrature so that their analytic
// cancellation is preserved numerically: for an instantaneous traversal the
// residual vanishes to rounding for every waveform, and for a linear ramp
// the residual measures only the finite traversal time. Both pieces flip
// sign with the traversal direction.
PhaseBreakdown total_phase(const LoopSpec& loop, const Solenoid& s,
                           const QuadratureSpec& q = {});

// One Faraday-law check on a coaxial circle of radius rho at time t:
// emf = Loop E . dx (azimuthal quadrature on the exact circle), and
// flux_rate_term = (1/c) d/dt Integral B . dS (surface quadrature of the
// analytic dB/dt, split at the solenoid wall). residual = emf +
// flux_rate_term, which vanishes identically for these fields.
struct FaradayCheck {
  double emf = 0.0;             // statvolt (numerically G cm)
  double flux_rate_term = 0.0;  // same units
  double residual = 0.0;
};
FaradayCheck faraday_check(double rho, const Solenoid& s, double t,
                           int n_phi = 64, int n_r = 64);

// Infinitesimal surface element of the phase two-form at azimuth step dphi
// and time step dt, evaluated outside the solenoid at radius rho:
//
//   electric_piece = (e / hbar c) E_phi(rho, t) * (rho dphi) * (c dt)
//   magnetic_piece = (e / hbar c) * (dphi R^2 / 2) * dB/dt * dt
//
// The two are algebraically opposite, so sum = 0 to machine precision: the
// flux swept into the element by the changing field is exactly the EMF
// element. Units: rad.
struct InfinitesimalPhase {
  double electric_piece = 0.0;
  double magnetic_piece = 0.0;
  double sum = 0.0;
};
InfinitesimalPhase infinitesimal_phase(double rho, double dphi, double dt,
                                       const Solenoid& s, double t);

}  // namespace abfringe
