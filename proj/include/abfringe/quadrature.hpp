#pragma once

#include <functional>
#include <span>

#include "abfringe/path.hpp"
#include "abfringe/vec.hpp"

namespace abfringe {

// A time-dependent vector field sampled at (position, time).
using VecField = std::function<Vec3(const Vec3&, double)>;

struct LineIntegralResult {
  double value = 0.0;
  bool degenerate = false;  // set when the path has zero length
};

// Integral of f . dx along a timed path, sampling the field at the
// interpolated (position, time) of each quadrature node. Composite Simpson
// with n_sub panels (2*n_sub intervals) per segment. Throws NumericsError on
// non-finite samples.
LineIntegralResult line_integral(const VecField& f, const TimedPath& path,
                                 int n_sub = 64);

// Flat disk used as an integration surface.
struct Disk {
  Vec3 center;
  Vec3 normal;    // need not be unit length; normalized internally
  double radius = 0.0;  // cm
};

// Flux of f through the disk at time t: integral of f . n over the surface
// in polar coordinates, composite Simpson with n_r radial panels per radial
// section and n_phi angular panels. r_breaks lists radii (measured from the
// disk center) where the radial integration is split, so that a field with a
// kink (e.g. at a solenoid wall) is integrated exactly on each smooth piece.
double surface_flux(const VecField& f, const Disk& disk, double t,
                    int n_r = 64, int n_phi = 64,
                    std::span<const double> r_breaks = {});

// Central-difference curl of f at (x, t) with spatial step h.
Vec3 fd_curl(const VecField& f, const Vec3& x, double t, double h);

// Central-difference time derivative of f at (x, t) with time step h.
Vec3 fd_time_derivative(const VecField& f, const Vec3& x, double t, double h);

// Composite Simpson on [a, b] with n panels (2n intervals).
double simpson(const std::function<double(double)>& f, double a, double b,
               int n_panels);

}  // namespace abfringe
