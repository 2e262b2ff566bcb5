#include <cmath>

#include "doctest.h"

#include "abfringe/constants.hpp"
#include "abfringe/errors.hpp"
#include "abfringe/phase.hpp"

using namespace abfringe;
namespace k = abfringe::constants;

namespace {

Solenoid ramp_solenoid(double rate, double anchor) {
  Solenoid s;
  s.radius = 1.0;
  s.waveform = Waveform::ramp(0.0, rate, anchor);
  return s;
}

LoopSpec loop_at(double rho, double t0, int direction = +1) {
  LoopSpec l;
  l.rho = rho;
  l.t0 = t0;
  l.direction = direction;
  return l;
}

}  // namespace

TEST_CASE("instantaneous traversal cancels the time-dependent phase") {
  Solenoid s = ramp_solenoid(2.0, 0.0);
  for (double rho : {1.5, 2.0, 10.0}) {
    for (int dir : {+1, -1}) {
      LoopSpec loop = loop_at(rho, 3.0, dir);
      auto b = total_phase(loop, s);
      const double varying = b.magnetic - b.static_part;
      REQUIRE(std::abs(varying) > 1e5);  // the effect being cancelled is big
      CHECK(std::abs(b.time_dependent_residual) <= 1e-12 * std::abs(varying));
      CHECK(b.total == doctest::Approx(b.electric + b.magnetic));
    }
  }
}

TEST_CASE("sinusoid and nonzero DC level cancel the same way") {
  Solenoid s;
  s.radius = 1.0;
  s.waveform = Waveform::sinusoid(0.7, 1.3, 60.0, 0.4);
  for (double t0 : {0.0, 1.9e-3, 0.25}) {
    auto b = total_phase(loop_at(2.5, t0), s);
    const double varying = b.magnetic - b.static_part;
    CHECK(std::abs(b.time_dependent_residual) <=
          1e-11 * std::max(std::abs(varying), std::abs(b.static_part)));
    // the static flux phase survives: pi R^2 B_dc (e / hbar c)
    CHECK(b.static_part ==
          doctest::Approx(k::phase_per_flux * k::pi * 0.7).epsilon(1e-6));
  }
}

TEST_CASE("both phase pieces flip sign with the traversal direction") {
  Solenoid s = ramp_solenoid(1.5, 0.0);
  auto fwd = total_phase(loop_at(2.0, 2.0, +1), s);
  auto bwd = total_phase(loop_at(2.0, 2.0, -1), s);
  CHECK(fwd.electric == doctest::Approx(-bwd.electric).epsilon(1e-12));
  CHECK(fwd.magnetic == doctest::Approx(-bwd.magnetic).epsilon(1e-12));
}

TEST_CASE("flux phase outside is radius independent (all flux enclosed)") {
  Solenoid s = ramp_solenoid(1.0, 0.0);
  const double p2 = magnetic_flux_phase(loop_at(2.0, 1.0), s, 1.0);
  const double p7 = magnetic_flux_phase(loop_at(7.0, 1.0), s, 1.0);
  CHECK(p2 == doctest::Approx(p7).epsilon(1e-10));
  CHECK(p2 == doctest::Approx(k::phase_per_flux * k::pi * 1.0).epsilon(1e-9));
}

TEST_CASE("flux phase inside scales with the loop area") {
  Solenoid s;
  s.radius = 1.0;
  s.waveform = Waveform::constant(2.0);
  LoopSpec loop = loop_at(0.5, 0.0);
  loop.n_events = 8192;  // fine polygon: area deficit (2 pi/N)^2/6 ~ 1e-7
  const double got = magnetic_flux_phase(loop, s, 0.0);
  const double expect = k::phase_per_flux * k::pi * 0.25 * 2.0;
  CHECK(got == doctest::Approx(expect).epsilon(5e-7));
}

TEST_CASE("a loop polygon straddling the wall is rejected") {
  Solenoid s = ramp_solenoid(1.0, 0.0);
  LoopSpec loop = loop_at(1.01, 0.0);
  loop.n_events = 16;  // 1.01 cos(pi/16) < 1: chords dip inside
  CHECK_THROWS_AS(total_phase(loop, s), GeometryError);
  loop.n_events = 512;  // fine enough to stay outside
  CHECK_NOTHROW(total_phase(loop, s));
}

TEST_CASE("finite ramp traversal leaves exactly the swept flux") {
  // For B = rate (t - t0) switched on at t0 = anchor, a traversal lasting T
  // leaves residual -(e/hbar c) * Phi_dot * T: the flux swept while the
  // electron is in flight.
  Solenoid s = ramp_solenoid(3.0, 2.0);
  LoopSpec loop = loop_at(2.0, 5.0);
  loop.duration = 0.25;
  auto b = total_phase(loop, s);
  const double swept = -k::phase_per_flux * k::pi * 1.0 * 3.0 * 0.25;
  CHECK(b.time_dependent_residual == doctest::Approx(swept).epsilon(1e-9));
}

TEST_CASE("fast traversal residual is quadratic in the traversal time") {
  // Sinusoid entered at a field extremum: residual ~ (omega T)^2 / 2
  // relative to the varying flux phase.
  Solenoid s;
  s.radius = 1.0;
  s.waveform = Waveform::sinusoid(0.0, 1.0, 60.0, k::pi / 2);
  auto ratio_for = [&](double T) {
    LoopSpec loop = loop_at(2.0, 0.0);
    loop.duration = T;
    auto b = total_phase(loop, s);
    return std::abs(b.time_dependent_residual / b.magnetic);
  };
  const double omega = 2 * k::pi * 60.0;
  const double r1 = ratio_for(1e-4);
  CHECK(r1 == doctest::Approx(0.5 * std::pow(omega * 1e-4, 2)).epsilon(1e-2));
  CHECK(ratio_for(2e-4) / r1 == doctest::Approx(4.0).epsilon(1e-2));
}

TEST_CASE("faraday identity holds on circles inside and outside") {
  Solenoid s;
  s.radius = 1.0;
  s.waveform = Waveform::sinusoid(0.0, 1.0, 60.0, 0.0);
  for (double rho : {0.4, 2.0, 6.0}) {
    for (double t : {1.0e-3, 4.1e-3}) {
      auto f = faraday_check(rho, s, t);
      REQUIRE(std::abs(f.emf) > 0.0);
      CHECK(std::abs(f.residual) <= 1e-12 * std::abs(f.emf));
    }
  }
}

TEST_CASE("faraday emf outside is wall-area limited") {
  Solenoid s;
  s.radius = 1.0;
  s.waveform = Waveform::ramp(0.0, 5.0, 0.0);
  auto in = faraday_check(0.5, s, 0.0);
  auto out = faraday_check(3.0, s, 0.0);
  // d(flux)/dt: pi rho^2 rate inside, pi R^2 rate outside
  CHECK(in.emf == doctest::Approx(-k::pi * 0.25 * 5.0 / k::c).epsilon(1e-12));
  CHECK(out.emf == doctest::Approx(-k::pi * 1.0 * 5.0 / k::c).epsilon(1e-12));
}

TEST_CASE("infinitesimal phase element cancels and is bilinear") {
  Solenoid s;
  s.radius = 1.0;
  s.waveform = Waveform::sinusoid(0.2, 0.8, 60.0, 0.9);
  const double t = 3.3e-3;
  auto p = infinitesimal_phase(2.0, 1e-3, 1e-6, s, t);
  REQUIRE(std::abs(p.electric_piece) > 0.0);
  CHECK(std::abs(p.sum) <= 1e-14 * std::abs(p.electric_piece));
  auto p2 = infinitesimal_phase(2.0, 2e-3, 1e-6, s, t);
  CHECK(p2.electric_piece == doctest::Approx(2 * p.electric_piece));
  auto p3 = infinitesimal_phase(2.0, 1e-3, 3e-6, s, t);
  CHECK(p3.magnetic_piece == doctest::Approx(3 * p.magnetic_piece));
  CHECK_THROWS_AS(infinitesimal_phase(0.5, 1e-3, 1e-6, s, t), GeometryError);
}

TEST_CASE("loop spec validation") {
  Solenoid s = ramp_solenoid(1.0, 0.0);
  LoopSpec bad = loop_at(-1.0, 0.0);
  CHECK_THROWS_AS(bad.validate(s), GeometryError);
  bad = loop_at(2.0, 0.0);
  bad.duration = -1.0;
  CHECK_THROWS_AS(bad.validate(s), GeometryError);
  bad = loop_at(2.0, 0.0);
  bad.direction = 0;
  CHECK_THROWS_AS(bad.validate(s), GeometryError);
  bad = loop_at(2.0, 0.0);
  bad.n_events = 2;
  CHECK_THROWS_AS(bad.validate(s), GeometryError);
}
