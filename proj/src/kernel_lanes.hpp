#pragma once

#include <cmath>
#include <limits>

// Per-lane reference arithmetic for the batch kernels. The SIMD variants
// mirror these expressions operation for operation (same selects, same
// min/max semantics, no FMA contraction) so scalar and vector paths produce
// bit-identical outputs; the equivalence tests assert exactly that.

namespace lrfsim::kernels::lanes {

inline constexpr double kMiss = std::numeric_limits<double>::infinity();
inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Match _mm256_min_pd / _mm256_max_pd: return the second operand on ties.
inline double vmin(double a, double b) { return a < b ? a : b; }
inline double vmax(double a, double b) { return a > b ? a : b; }
inline double sel(bool c, double a, double b) { return c ? a : b; }

// Slab interval [*lo, *hi] for one axis; empty interval (+inf, -inf) on a
// parallel ray outside the slab.
inline void slab(double o, double d, double lo, double hi, double* t_lo, double* t_hi) {
  const double invd = 1.0 / d;
  const double t1 = (lo - o) * invd;
  const double t2 = (hi - o) * invd;
  const bool parallel = d == 0.0;
  const bool inside = o >= lo && o <= hi;
  *t_lo = sel(parallel, sel(inside, -kInf, kInf), vmin(t1, t2));
  *t_hi = sel(parallel, sel(inside, kInf, -kInf), vmax(t1, t2));
}

inline double finish(double enter, double exit) {
  const bool hit = enter <= exit && exit >= 0.0;
  // + 0.0 normalizes a -0 entry distance.
  return sel(hit, vmax(enter, 0.0) + 0.0, kMiss);
}

inline double ray_cylinder(double relx, double rely, double oz, double dx, double dy,
                           double dz, double r2, double z0, double z1) {
  const double a = dx * dx + dy * dy;
  const double b = relx * dx + rely * dy;  // half-b form
  const double c = relx * relx + rely * rely - r2;
  const double disc = b * b - a * c;
  const double s = std::sqrt(disc);  // NaN on misses, selected away below
  const double inva = 1.0 / a;
  const double t1 = (-b - s) * inva;
  const double t2 = (-b + s) * inva;
  const bool lateral_hit = a > 0.0 && disc >= 0.0;
  const bool vertical_inside = a == 0.0 && c <= 0.0;
  const double lat_lo = sel(vertical_inside, -kInf, sel(lateral_hit, t1, kInf));
  const double lat_hi = sel(vertical_inside, kInf, sel(lateral_hit, t2, -kInf));
  double z_lo, z_hi;
  slab(oz, dz, z0, z1, &z_lo, &z_hi);
  return finish(vmax(lat_lo, z_lo), vmin(lat_hi, z_hi));
}

inline double ray_box(double ox, double oy, double oz, double dx, double dy, double dz,
                      double x0, double x1, double y0, double y1, double z0, double z1) {
  double x_lo, x_hi, y_lo, y_hi, z_lo, z_hi;
  slab(ox, dx, x0, x1, &x_lo, &x_hi);
  slab(oy, dy, y0, y1, &y_lo, &y_hi);
  slab(oz, dz, z0, z1, &z_lo, &z_hi);
  return finish(vmax(x_lo, vmax(y_lo, z_lo)), vmin(x_hi, vmin(y_hi, z_hi)));
}

inline double dist_sq3(double x, double y, double z, double px, double py, double pz) {
  const double dx = x - px;
  const double dy = y - py;
  const double dz = z - pz;
  return (dx * dx + dy * dy) + dz * dz;
}

}  // namespace lrfsim::kernels::lanes
