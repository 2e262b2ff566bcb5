#include "abfringe/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "abfringe/constants.hpp"
#include "abfringe/errors.hpp"

namespace abfringe {

namespace {

// Simpson weights on 2n+1 uniform nodes, scaled by h/3.
double simpson_weight(int i, int last) {
  if (i == 0 || i == last) return 1.0;
  return (i % 2 == 1) ? 4.0 : 2.0;
}

}  // namespace

double simpson(const std::function<double(double)>& f, double a, double b,
               int n_panels) {
  if (n_panels < 1) throw NumericsError("simpson needs at least one panel");
  if (a == b) return 0.0;
  const int last = 2 * n_panels;
  const double h = (b - a) / last;
  double sum = 0.0;
  for (int i = 0; i <= last; ++i) {
    const double fi = f(a + h * i);
    if (!std::isfinite(fi)) {
      throw NumericsError("simpson sampled a non-finite value");
    }
    sum += simpson_weight(i, last) * fi;
  }
  return sum * h / 3.0;
}

LineIntegralResult line_integral(const VecField& f, const TimedPath& path,
                                 int n_sub) {
  path.validate();
  if (n_sub < 1) throw NumericsError("line_integral needs n_sub >= 1");
  LineIntegralResult out;
  if (path.degenerate()) {
    out.degenerate = true;
    return out;
  }
  const int last = 2 * n_sub;
  double total = 0.0;
  for (std::size_t seg = 0; seg + 1 < path.events.size(); ++seg) {
    const Event& a = path.events[seg];
    const Event& b = path.events[seg + 1];
    const Vec3 dx = b.pos - a.pos;
    // f . dx vanishes identically on a zero-length segment.
    if (dx.x == 0.0 && dx.y == 0.0 && dx.z == 0.0) continue;
    double seg_sum = 0.0;
    for (int i = 0; i <= last; ++i) {
      const double u = static_cast<double>(i) / last;
      const Vec3 pos = a.pos + u * dx;
      const double t = a.t + u * (b.t - a.t);
      const Vec3 fv = f(pos, t);
      if (!finite(fv)) {
        throw NumericsError("line_integral sampled a non-finite field");
      }
      seg_sum += simpson_weight(i, last) * dot(fv, dx);
    }
    // dx already carries the segment length; h/3 with h = 1/last.
    total += seg_sum / (3.0 * last);
  }
  out.value = total;
  return out;
}

double surface_flux(const VecField& f, const Disk& disk, double t, int n_r,
                    int n_phi, std::span<const double> r_breaks) {
  if (!(disk.radius > 0.0)) {
    throw GeometryError("surface_flux needs a positive disk radius");
  }
  if (n_r < 1 || n_phi < 1) {
    throw NumericsError("surface_flux needs positive panel counts");
  }
  const double nn = norm(disk.normal);
  if (!(nn > 0.0)) {
    throw GeometryError("surface_flux needs a nonzero disk normal");
  }
  const Vec3 n_hat = disk.normal / nn;
  // Build an in-plane orthonormal pair.
  Vec3 seed = std::abs(n_hat.x) < 0.9 ? Vec3{1.0, 0.0, 0.0}
                                      : Vec3{0.0, 1.0, 0.0};
  Vec3 u = cross(n_hat, seed);
  u = u / norm(u);
  const Vec3 v = cross(n_hat, u);

  std::vector<double> edges{0.0};
  for (double rb : r_breaks) {
    if (rb > 0.0 && rb < disk.radius) edges.push_back(rb);
  }
  edges.push_back(disk.radius);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  const int phi_last = 2 * n_phi;
  const double phi_h = 2.0 * constants::pi / phi_last;

  double total = 0.0;
  for (std::size_t sec = 0; sec + 1 < edges.size(); ++sec) {
    const double ra = edges[sec];
    const double rb = edges[sec + 1];
    const int r_last = 2 * n_r;
    const double r_h = (rb - ra) / r_last;
    // Keep samples strictly inside the section so a field with a kink (or
    // jump) exactly at a break radius is integrated as its smooth one-sided
    // piece. The shift is far below the quadrature error.
    const double nudge = (rb - ra) * 1e-9;
    double sec_sum = 0.0;
    for (int i = 0; i <= r_last; ++i) {
      double r = ra + r_h * i;
      if (i == 0) r = ra + nudge;
      if (i == r_last) r = rb - nudge;
      double ring = 0.0;
      for (int j = 0; j <= phi_last; ++j) {
        const double phi = phi_h * j;
        const Vec3 pos =
            disk.center + r * (std::cos(phi) * u + std::sin(phi) * v);
        const Vec3 fv = f(pos, t);
        if (!finite(fv)) {
          throw NumericsError("surface_flux sampled a non-finite field");
        }
        ring += simpson_weight(j, phi_last) * dot(fv, n_hat);
      }
      ring *= phi_h / 3.0;
      sec_sum += simpson_weight(i, r_last) * ring * r;
    }
    total += sec_sum * r_h / 3.0;
  }
  return total;
}

Vec3 fd_curl(const VecField& f, const Vec3& x, double t, double h) {
  if (!(h > 0.0)) throw NumericsError("fd_curl needs a positive step");
  const auto d = [&](int comp) {
    Vec3 dx{0.0, 0.0, 0.0};
    if (comp == 0) dx.x = h;
    if (comp == 1) dx.y = h;
    if (comp == 2) dx.z = h;
    const Vec3 plus = f(x + dx, t);
    const Vec3 minus = f(x - dx, t);
    return (plus - minus) / (2.0 * h);
  };
  const Vec3 dfdx = d(0);
  const Vec3 dfdy = d(1);
  const Vec3 dfdz = d(2);
  return {dfdy.z - dfdz.y, dfdz.x - dfdx.z, dfdx.y - dfdy.x};
}

Vec3 fd_time_derivative(const VecField& f, const Vec3& x, double t, double h) {
  if (!(h > 0.0)) {
    throw NumericsError("fd_time_derivative needs a positive step");
  }
  return (f(x, t + h) - f(x, t - h)) / (2.0 * h);
}

}  // namespace abfringe
