#include "abfringe/fields.hpp"

#include <cmath>

#include "abfringe/constants.hpp"
#include "abfringe/errors.hpp"

namespace abfringe {

namespace {
constexpr double two_pi = 2.0 * constants::pi;
}

Waveform Waveform::constant(double b_static) {
  Waveform w;
  w.kind = WaveformKind::constant;
  w.b_static = b_static;
  return w;
}

Waveform Waveform::sinusoid(double b_static, double b_amp, double freq_hz,
                            double phase0) {
  Waveform w;
  w.kind = WaveformKind::sinusoid;
  w.b_static = b_static;
  w.b_amp = b_amp;
  w.freq_hz = freq_hz;
  w.phase0 = phase0;
  return w;
}

Waveform Waveform::ramp(double b_static, double rate, double ramp_t0) {
  Waveform w;
  w.kind = WaveformKind::ramp;
  w.b_static = b_static;
  w.rate = rate;
  w.ramp_t0 = ramp_t0;
  return w;
}

double Waveform::value(double t) const {
  switch (kind) {
    case WaveformKind::constant:
      return b_static;
    case WaveformKind::sinusoid:
      return b_static + b_amp * std::sin(two_pi * freq_hz * t + phase0);
    case WaveformKind::ramp:
      return b_static + rate * (t - ramp_t0);
  }
  throw ConfigError("unknown waveform kind");
}

double Waveform::d_dt(double t) const {
  switch (kind) {
    case WaveformKind::constant:
      return 0.0;
    case WaveformKind::sinusoid:
      return b_amp * two_pi * freq_hz * std::cos(two_pi * freq_hz * t + phase0);
    case WaveformKind::ramp:
      return rate;
  }
  throw ConfigError("unknown waveform kind");
}

double Waveform::switch_on_reference(double t) const {
  switch (kind) {
    case WaveformKind::constant:
      return t;
    case WaveformKind::sinusoid: {
      // Latest zero of sin(w t + phase0) at or before t.
      const double arg = two_pi * freq_hz * t + phase0;
      const double k = std::floor(arg / constants::pi);
      return (k * constants::pi - phase0) / (two_pi * freq_hz);
    }
    case WaveformKind::ramp:
      // The anchor, where the varying part is zero by construction. This is
      // the one reference that may sit later than t.
      return ramp_t0;
  }
  throw ConfigError("unknown waveform kind");
}

void Waveform::validate() const {
  const bool all_finite = std::isfinite(b_static) && std::isfinite(b_amp) &&
                          std::isfinite(freq_hz) && std::isfinite(phase0) &&
                          std::isfinite(rate) && std::isfinite(ramp_t0);
  if (!all_finite) throw ConfigError("waveform has a non-finite parameter");
  if (kind == WaveformKind::sinusoid && !(freq_hz > 0.0)) {
    throw ConfigError("sinusoid waveform needs freq_hz > 0");
  }
}

void Solenoid::validate() const {
  if (!(radius > 0.0)) throw ConfigError("solenoid radius must be positive");
  waveform.validate();
}

namespace {

// Azimuthal unit vector scaled by the given magnitude; zero on the axis,
// where the potential vanishes anyway.
Vec3 azimuthal(const Vec3& x, double magnitude) {
  const double rho = rho_xy(x);
  if (rho == 0.0) return {0.0, 0.0, 0.0};
  return {-x.y / rho * magnitude, x.x / rho * magnitude, 0.0};
}

// Shared radial profile of the vector potential per unit field:
// rho/2 inside the wall, R^2/(2 rho) outside.
double potential_profile(const Solenoid& s, double rho) {
  if (rho < s.radius) return 0.5 * rho;
  return 0.5 * s.radius * s.radius / rho;
}

}  // namespace

Vec3 vector_potential(const Solenoid& s, const Vec3& x, double t) {
  return azimuthal(x, potential_profile(s, rho_xy(x)) * s.waveform.value(t));
}

Vec3 magnetic_field(const Solenoid& s, const Vec3& x, double t) {
  if (rho_xy(x) < s.radius) return {0.0, 0.0, s.waveform.value(t)};
  return {0.0, 0.0, 0.0};
}

Vec3 electric_field(const Solenoid& s, const Vec3& x, double t) {
  // E = -(1/c) dA/dt, and only the waveform carries time dependence.
  const double scale =
      -potential_profile(s, rho_xy(x)) * s.waveform.d_dt(t) / constants::c;
  return azimuthal(x, scale);
}

double flux(const Solenoid& s, double rho, double t) {
  if (!(rho > 0.0)) throw GeometryError("flux needs a positive loop radius");
  const double captured = std::min(rho, s.radius);
  return constants::pi * captured * captured * s.waveform.value(t);
}

PotentialSplit static_time_split(const Solenoid& s, const Vec3& x, double t) {
  PotentialSplit out;
  const double profile = potential_profile(s, rho_xy(x));
  out.total = azimuthal(x, profile * s.waveform.value(t));
  out.static_part = azimuthal(x, profile * s.waveform.b_static);
  out.varying_part = azimuthal(x, profile * s.waveform.varying(t));
  return out;
}

double UniformField::bz(double t) const {
  if (!waveform) return b0;
  return b0 + waveform->varying(t);
}

}  // namespace abfringe
