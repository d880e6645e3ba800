#include "lrfsim/kernels.hpp"

#include "kernel_lanes.hpp"

namespace lrfsim::kernels {

namespace {

void ray_cylinder_scalar(const RayBatch& rays, const CylinderShape& cyl, double* t_out) {
  const double relx = rays.ox - cyl.cx;
  const double rely = rays.oy - cyl.cy;
  const double r2 = cyl.radius * cyl.radius;
  for (std::size_t i = 0; i < rays.n; ++i) {
    t_out[i] = lanes::ray_cylinder(relx, rely, rays.oz, rays.dx[i], rays.dy[i],
                                   rays.dz[i], r2, cyl.z0, cyl.z1);
  }
}

void ray_box_scalar(const RayBatch& rays, const BoxShape& box, double* t_out) {
  const double x0 = box.cx - box.hx, x1 = box.cx + box.hx;
  const double y0 = box.cy - box.hy, y1 = box.cy + box.hy;
  for (std::size_t i = 0; i < rays.n; ++i) {
    t_out[i] = lanes::ray_box(rays.ox, rays.oy, rays.oz, rays.dx[i], rays.dy[i],
                              rays.dz[i], x0, x1, y0, y1, box.z0, box.z1);
  }
}

void dist_sq3_scalar(std::size_t n, const double* x, const double* y, const double* z,
                     double px, double py, double pz, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = lanes::dist_sq3(x[i], y[i], z[i], px, py, pz);
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{ray_cylinder_scalar, ray_box_scalar, dist_sq3_scalar,
                                 "scalar"};
  return table;
}

}  // namespace lrfsim::kernels
