#pragma once

#include <optional>

#include "abfringe/vec.hpp"

namespace abfringe {

enum class WaveformKind { constant, sinusoid, ramp };

// Scalar field amplitude versus time, B(t) in gauss:
//
//   constant   B(t) = B_static
//   sinusoid   B(t) = B_static + B_amp * sin(2 pi freq t + phase0)
//   ramp       B(t) = B_static + rate * (t - ramp_t0)
//
// The ramp exists so that identities which hold exactly for a linear-in-time
// field can be tested exactly; the sinusoid covers the 60 Hz stray-field
// case. switch_on_reference(t) returns the latest time <= t at which the
// time-varying part vanishes, which is where time integrals of the induced
// electric field start.
struct Waveform {
  WaveformKind kind = WaveformKind::constant;
  double b_static = 0.0;  // G
  double b_amp = 0.0;     // G, sinusoid amplitude
  double freq_hz = 0.0;   // Hz
  double phase0 = 0.0;    // rad
  double rate = 0.0;      // G/s, ramp slope
  double ramp_t0 = 0.0;   // s, time where the ramp's varying part is zero

  static Waveform constant(double b_static);
  static Waveform sinusoid(double b_static, double b_amp, double freq_hz,
                           double phase0 = 0.0);
  static Waveform ramp(double b_static, double rate, double ramp_t0 = 0.0);

  double value(double t) const;    // G
  double d_dt(double t) const;     // G/s
  double varying(double t) const { return value(t) - b_static; }
  double switch_on_reference(double t) const;

  // Throws ConfigError on invalid parameters (e.g. sinusoid with freq 0).
  void validate() const;
};

// Infinite solenoid of radius `radius` along the z axis carrying a uniform
// interior field B(t) z_hat. Outside, B = 0 but the vector potential and the
// induced electric field do not vanish:
//
//   A = (rho B(t)/2) phi_hat            inside
//   A = (B(t) R^2 / (2 rho)) phi_hat    outside
//   E = -(1/c) dA/dt                    everywhere
//
// with phi_hat the azimuthal unit vector. All fields are evaluated in
// Gaussian units (A in G cm, E in statvolt/cm).
struct Solenoid {
  double radius = 1.0;  // cm
  Waveform waveform;

  void validate() const;
};

Vec3 vector_potential(const Solenoid& s, const Vec3& x, double t);
Vec3 magnetic_field(const Solenoid& s, const Vec3& x, double t);
Vec3 electric_field(const Solenoid& s, const Vec3& x, double t);

// Flux through a coaxial circle of radius rho at time t, G cm^2:
// pi rho^2 B(t) inside, pi R^2 B(t) outside.
double flux(const Solenoid& s, double rho, double t);

// Vector potential separated into its static and time-varying parts,
// A = A_static + A_varying. The varying part alone sources E.
struct PotentialSplit {
  Vec3 total;
  Vec3 static_part;
  Vec3 varying_part;
};
PotentialSplit static_time_split(const Solenoid& s, const Vec3& x, double t);

// Spatially uniform B field along z: a DC level plus (optionally) the
// time-varying part of a waveform. Used for the interferometer region,
// where the stray field is treated quasi-statically.
struct UniformField {
  double b0 = 0.0;  // G
  std::optional<Waveform> waveform;

  double bz(double t) const;
};

}  // namespace abfringe
