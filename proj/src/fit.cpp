#include "abfringe/fit.hpp"

#include <cmath>
#include <vector>

#include "abfringe/errors.hpp"

namespace abfringe {

LinearFit fit_linear(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw NumericsError("fit_linear needs equal-length inputs");
  }
  const std::size_t n = x.size();
  if (n < 2) throw NumericsError("fit_linear needs at least two points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (!(sxx > 0.0)) {
    throw NumericsError("fit_linear: abscissa values are degenerate");
  }
  LinearFit out;
  out.slope = sxy / sxx;
  out.intercept = my - out.slope * mx;
  out.r2 = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return out;
}

LinearFit fit_loglog(std::span<const double> x, std::span<const double> y,
                     double floor) {
  std::vector<double> lx, ly;
  lx.reserve(x.size());
  ly.reserve(y.size());
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    const double ax = std::abs(x[i]);
    const double ay = std::abs(y[i]);
    if (ax > floor && ay > floor && std::isfinite(ax) && std::isfinite(ay)) {
      lx.push_back(std::log(ax));
      ly.push_back(std::log(ay));
    }
  }
  if (lx.size() < 3) {
    throw NumericsError("fit_loglog has fewer than 3 usable points");
  }
  return fit_linear(lx, ly);
}

CircleFit fit_circle_xy(std::span<const double> x,
                        std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 3) {
    throw NumericsError("fit_circle_xy needs at least 3 matched points");
  }
  const std::size_t n = x.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  // Kasa in centered coordinates: linear system for the center.
  double suu = 0.0, suv = 0.0, svv = 0.0, suuu = 0.0, svvv = 0.0, suvv = 0.0,
         svuu = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = x[i] - mx;
    const double v = y[i] - my;
    suu += u * u;
    suv += u * v;
    svv += v * v;
    suuu += u * u * u;
    svvv += v * v * v;
    suvv += u * v * v;
    svuu += v * u * u;
  }
  const double det = suu * svv - suv * suv;
  if (det == 0.0 || !std::isfinite(det)) {
    throw NumericsError("fit_circle_xy: degenerate point set");
  }
  const double rhs_u = 0.5 * (suuu + suvv);
  const double rhs_v = 0.5 * (svvv + svuu);
  const double uc = (rhs_u * svv - rhs_v * suv) / det;
  const double vc = (rhs_v * suu - rhs_u * suv) / det;
  CircleFit out;
  out.cx = uc + mx;
  out.cy = vc + my;
  out.r = std::sqrt(uc * uc + vc * vc + (suu + svv) / static_cast<double>(n));
  return out;
}

}  // namespace abfringe
