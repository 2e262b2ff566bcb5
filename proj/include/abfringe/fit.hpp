#pragma once

#include <span>

namespace abfringe {

// Least-squares line y = slope * x + intercept.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

// Throws NumericsError if fewer than two points or degenerate x.
LinearFit fit_linear(std::span<const double> x, std::span<const double> y);

// fit_linear on (log|x|, log|y|); the slope is the power-law exponent.
// Points where |x| or |y| <= floor are dropped first.
LinearFit fit_loglog(std::span<const double> x, std::span<const double> y,
                     double floor = 0.0);

// Algebraic least-squares circle through (x_i, y_i) (Kasa method): linear in
// (center, radius^2), good enough to recover an orbit radius to ~1e-9
// relative on clean data. Throws NumericsError for < 3 points or a
// degenerate normal system.
struct CircleFit {
  double cx = 0.0;
  double cy = 0.0;
  double r = 0.0;
};
CircleFit fit_circle_xy(std::span<const double> x, std::span<const double> y);

}  // namespace abfringe
