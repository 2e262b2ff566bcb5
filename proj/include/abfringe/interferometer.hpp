#pragma once

#include <span>
#include <vector>

#include "abfringe/fields.hpp"

namespace abfringe {

// Three-crystal electron interferometer in the x-y plane, crystal planes
// normal to the beam axis at x = 0, D, 2D. The incident beam arrives along
// +x and is split at C1 into a transmitted beam (straight on) and a
// diffracted beam turned by +2*theta; the middle crystal C2 applies the same
// +-2*theta turn to each so the two close a parallelogram at C3:
//
//            m1      _____ m2 ____
//          _____-----             C3
//    C1 ---------l1---------C2----     l: transmitted at C1, turned up at C2
//                            l2        m: turned up at C1, leveled at C2
//
// A uniform field B0 z_hat bends every leg into a circular arc of the
// gyroradius R; each leg is solved in closed form between its crystal
// planes. With B0 = 0 the legs are straight: l1 = m2 = D along the two
// transmitted directions and l2 = m1 = D/cos(2 theta), so the two routes
// have equal total length and enclose area 2 D^2 tan(theta) at small theta.
struct WBConfig {
  double d = 5.0;            // cm, crystal spacing
  double theta = 2.0e-2;     // rad, crystal diffraction angle (half of the turn)
  double lambda = 4.86e-10;  // cm, de Broglie wavelength
  double b0 = 1.0;           // G, signed z component of the uniform field

  void validate() const;
};

// Gyroradius 2 pi hbar c / (e lambda |b0|) in cm. Throws GeometryError when
// b0 = 0: straight rays have no curvature radius, use the chord geometry.
double radius_of_curvature(double lambda, double b0);

// One leg between consecutive crystal planes: a straight chord at B0 = 0,
// otherwise a circular arc of signed curvature e*B0/(p*c) (an electron in
// B0 > 0 moving along +x curves toward +y).
struct Leg {
  Vec3 start;                // cm
  Vec3 end;                  // cm
  double entry_angle = 0.0;  // rad, tangent direction at the start
  double exit_angle = 0.0;   // rad, tangent direction at the plane crossing
  double length = 0.0;       // cm, arc length
  double free_length = 0.0;  // cm, the same leg with the field off
  double delta = 0.0;        // cm, length - free_length
};

struct PathSet {
  Leg l1, l2, m1, m2;
  double enclosed_area = 0.0;  // cm^2, field-free value 2 D^2 tan(theta)
  // (l1 + l2) - (m1 + m2) of the bent lengths; the field-free parts cancel.
  double path_length_difference = 0.0;  // cm
};

// Solve the four legs. Throws GeometryError naming the leg that cannot
// reach its exit plane when the field is too strong for the spacing.
PathSet build_geometry(const WBConfig& cfg);

// Log-log slope of |delta| versus B0 for each leg over b_grid (entries
// > 0). Grid points where a delta is below 1e-12 cm are dropped for that
// leg; fewer than three surviving points raises NumericsError. The legs
// entered along the beam axis (l1, m2) fit to ~2, the turned legs (l2, m1)
// to ~1.
struct ScalingExponents {
  double l1 = 0.0, l2 = 0.0, m1 = 0.0, m2 = 0.0;
};
ScalingExponents scaling_exponents(const WBConfig& cfg,
                                   std::span<const double> b_grid);

// Log-log slope of |delta_l2| versus D over d_grid at fixed field (~2: the
// first-order length shift grows as D^2 tan(theta)/R).
double scaling_exponent_in_d(const WBConfig& cfg,
                             std::span<const double> d_grid);

// Interference phases for one static field value, route l minus route m.
//
//   ab_phase         flux phase of the field through the field-free
//                    parallelogram, signed for the electron charge
//   dynamical_phase  (2 pi / lambda) * [(delta_l1 + delta_l2) -
//                    (delta_m1 + delta_m2)], or first order only (delta_l2
//                    - delta_m1) when include_second_order is false
//   net_phase        sum of the two; the near-cancellation leaves a
//                    residual small against either term when D/R << theta
//
// regime_ok requires D/R < theta/10 (a safe "much less than"); when that
// fails but D/R < theta still holds, regime_marginal is set instead.
struct PhaseReport {
  double ab_phase = 0.0;         // rad
  double dynamical_phase = 0.0;  // rad
  double net_phase = 0.0;        // rad
  double d_over_r = 0.0;
  bool regime_ok = false;
  bool regime_marginal = false;
};
PhaseReport phase_report(const WBConfig& cfg, bool include_second_order = true);

// Fringe models for the phase seen while a uniform field varies in time:
//   naive_ab           flux phase of the instantaneous field alone
//   werner_brill       flux phase plus the dynamical path-length phase
//   full_cancellation  flux phase of the static part only (the
//                      time-dependent part removed identically)
enum class FringeModel { naive_ab, werner_brill, full_cancellation };

struct FringeSample {
  double t = 0.0;      // s
  double b = 0.0;      // G
  double phase = 0.0;  // rad
  bool solvable = true;
};

struct FringeSeries {
  std::vector<FringeSample> samples;
  double peak_to_peak = 0.0;  // rad, over the solvable samples
  int skipped = 0;            // samples with unsolvable geometry
};

// Phase versus time over n_samples uniform samples of one waveform period
// (one second when the waveform has no period), evaluated quasi-statically
// with B0 := waveform value at each sample. threads > 1 spreads samples
// over a worker pool; samples stay ordered by index regardless.
FringeSeries fringe_time_series(const WBConfig& cfg, const Waveform& waveform,
                                int n_samples, FringeModel model,
                                int threads = 1);

}  // namespace abfringe
