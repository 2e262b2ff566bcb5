#pragma once

#include <vector>

#include "abfringe/vec.hpp"

namespace abfringe {

// A piecewise-linear timed curve. Position and time are interpolated
// linearly between consecutive events; quadrature routines integrate
// segment by segment.
struct TimedPath {
  std::vector<Event> events;
  bool closed = false;  // if true, first and last positions must coincide

  // Throws GeometryError unless there are at least two events, times are
  // non-decreasing, and (when closed) the endpoints agree to 1e-12 cm.
  void validate() const;

  // Total geometric length of the polyline, cm.
  double length() const;

  // True when every event sits at the same position (a zero-length path).
  bool degenerate() const;
};

// Closed circular loop of radius rho about the z axis in the plane z = z0,
// discretized into n uniform chords, traversed at uniform angular speed from
// t0 to t0 + duration. direction = +1 is counterclockwise seen from +z.
TimedPath circle_loop(double rho, double z0, double t0, double duration,
                      int direction, int n);

}  // namespace abfringe
