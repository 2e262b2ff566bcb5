#include "abfringe/path.hpp"

#include <cmath>
#include <string>

#include "abfringe/constants.hpp"
#include "abfringe/errors.hpp"

namespace abfringe {

void TimedPath::validate() const {
  if (events.size() < 2) {
    throw GeometryError("timed path needs at least two events, got " +
                        std::to_string(events.size()));
  }
  for (std::size_t i = 0; i + 1 < events.size(); ++i) {
    if (!(events[i + 1].t >= events[i].t)) {
      throw GeometryError("timed path has decreasing time at event " +
                          std::to_string(i + 1));
    }
  }
  for (const auto& ev : events) {
    if (!finite(ev.pos) || !std::isfinite(ev.t)) {
      throw GeometryError("timed path contains a non-finite event");
    }
  }
  if (closed) {
    const double gap = norm(events.front().pos - events.back().pos);
    if (gap > 1e-12) {
      throw GeometryError("closed path endpoints differ by " +
                          std::to_string(gap) + " cm");
    }
  }
}

double TimedPath::length() const {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < events.size(); ++i) {
    total += norm(events[i + 1].pos - events[i].pos);
  }
  return total;
}

bool TimedPath::degenerate() const { return length() == 0.0; }

TimedPath circle_loop(double rho, double z0, double t0, double duration,
                      int direction, int n) {
  if (!(rho > 0.0)) {
    throw GeometryError("circle loop radius must be positive");
  }
  if (direction != 1 && direction != -1) {
    throw GeometryError("circle loop direction must be +1 or -1");
  }
  if (n < 3) {
    throw GeometryError("circle loop needs at least 3 chords");
  }
  if (!(duration >= 0.0)) {
    throw GeometryError("circle loop duration must be >= 0");
  }
  TimedPath path;
  path.closed = true;
  path.events.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const double phi =
        direction * 2.0 * constants::pi * static_cast<double>(i) / n;
    Event ev;
    ev.pos = {rho * std::cos(phi), rho * std::sin(phi), z0};
    ev.t = t0 + duration * static_cast<double>(i) / n;
    path.events.push_back(ev);
  }
  // Close exactly; cos/sin of 2 pi round away from the start otherwise.
  path.events.back().pos = path.events.front().pos;
  return path;
}

}  // namespace abfringe
