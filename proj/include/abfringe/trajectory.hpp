#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "abfringe/vec.hpp"

namespace abfringe {

// Relativistic electron state. Momentum is the kinetic momentum; the path
// length is accumulated along the worldline as an extra integration
// variable.
struct ElectronState {
  Vec3 x;                   // cm
  Vec3 p;                   // g cm/s
  double t = 0.0;           // s
  double path_length = 0.0;  // cm
};

// de Broglie momentum p = h / lambda, g cm/s.
double momentum_from_wavelength(double lambda);

// Relativistic pc for a given kinetic energy, erg: sqrt(T^2 + 2 T mc^2).
double pc_from_kinetic(double kinetic);

// Total energy sqrt((pc)^2 + (mc^2)^2) for momentum magnitude p, erg.
double total_energy(double p);

// Speed pc^2 / E for momentum magnitude p, cm/s.
double speed(double p);

// Relativistic cyclotron period 2 pi E / (e B c) for momentum magnitude p in
// field B, s.
double gyro_period(double p, double b);

// Samples (E, B) at a position and time.
using EMSampler =
    std::function<std::pair<Vec3, Vec3>(const Vec3&, double)>;

EMSampler uniform_b_sampler(double b0);

struct Trajectory {
  std::vector<ElectronState> states;  // includes the initial state
  bool aborted = false;  // true if integration stopped on a non-finite value
};

// Fixed-step RK4 integration of
//
//   dx/dt = p c^2 / E,   dp/dt = q (E + v/c x B),   q = -e,
//
// keeping every sample_stride-th state. On a non-finite sample the
// trajectory is returned up to the last good state with aborted = true.
Trajectory integrate(const ElectronState& start, const EMSampler& fields,
                     double dt, long n_steps, long sample_stride = 1);

// Path length of an electron of wavelength lambda launched from `start` at
// `entry_angle` to the x axis (in the z = 0 plane) until it crosses the
// plane x = plane_x, in a uniform field b0 z_hat. RK4 with step
// dt_frac * gyro period (bounded so the leg is resolved), with the final
// crossing refined by bisection on the last substep. Serves as the
// integration oracle for the closed-form interferometer legs.
double leg_length(const Vec3& start, double entry_angle, double plane_x,
                  double lambda, double b0, double dt_frac = 1e-4);

}  // namespace abfringe
