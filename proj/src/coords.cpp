#include "lrfsim/coords.hpp"

#include <cmath>

namespace lrfsim {

GlobalPoint body_to_global(const BodyPoint& p, const FrameConfig& f) {
  const double c = std::cos(f.theta_g);
  const double s = std::sin(f.theta_g);
  return {p.x * c + p.y * s + f.global_origin.gx,
          -p.x * s + p.y * c + f.global_origin.gy,
          p.z + f.global_origin.gz};
}

BodyPoint global_to_body(const GlobalPoint& g, const FrameConfig& f) {
  const double c = std::cos(f.theta_g);
  const double s = std::sin(f.theta_g);
  const double dx = g.gx - f.global_origin.gx;
  const double dy = g.gy - f.global_origin.gy;
  return {dx * c - dy * s, dx * s + dy * c, g.gz - f.global_origin.gz};
}

BodyPoint lrf_frame_to_body(const BodyPoint& p_lrf, const LrfMount& mount) {
  return {p_lrf.x + mount.offset.x, p_lrf.y + mount.offset.y, p_lrf.z + mount.offset.z};
}

BodyPoint body_to_lrf_frame(const BodyPoint& p_body, const LrfMount& mount) {
  return {p_body.x - mount.offset.x, p_body.y - mount.offset.y, p_body.z - mount.offset.z};
}

SphericalPoint body_to_spherical(const BodyPoint& pa, const RobotPose& robot,
                                 const LrfMount& mount, const FrameConfig& f) {
  const BodyPoint exit = lrf_exit_point(robot, mount);
  const double dx = pa.x - exit.x;
  const double dy = pa.y - exit.y;
  const double dz = pa.z - exit.z;
  const double planar = std::hypot(dx, dy);
  const double r = std::hypot(planar, dz);
  if (r == 0.0) throw ZeroRangeError("spherical angles undefined at the LRF exit point");
  const double theta = std::atan2(planar, dz);
  // phi = 0 by convention on the local Z axis.
  const double phi = planar == 0.0 ? 0.0 : wrap_two_pi(std::atan2(dy, dx) - f.theta_g);
  return {r, phi, theta};
}

BodyPoint spherical_to_body(const SphericalPoint& ps, const RobotPose& robot,
                            const LrfMount& mount, const FrameConfig& f) {
  // Components in the R0-aligned frame, then the proper rotation through
  // theta_g into XYZ axes.
  const double rx = ps.r * std::sin(ps.theta) * std::cos(ps.phi);
  const double ry = ps.r * std::sin(ps.theta) * std::sin(ps.phi);
  const double rz = ps.r * std::cos(ps.theta);
  const double c = std::cos(f.theta_g);
  const double s = std::sin(f.theta_g);
  const BodyPoint exit = lrf_exit_point(robot, mount);
  return {rx * c - ry * s + exit.x, rx * s + ry * c + exit.y, rz + exit.z};
}

BodyPoint spherical_direction(double phi, double theta, double theta_g) {
  const double rx = std::sin(theta) * std::cos(phi);
  const double ry = std::sin(theta) * std::sin(phi);
  const double c = std::cos(theta_g);
  const double s = std::sin(theta_g);
  return {rx * c - ry * s, rx * s + ry * c, std::cos(theta)};
}

SphericalPoint global_to_spherical(const GlobalPoint& g, const RobotPose& robot,
                                   const LrfMount& mount, const FrameConfig& f) {
  return body_to_spherical(global_to_body(g, f), robot, mount, f);
}

GlobalPoint spherical_to_global(const SphericalPoint& ps, const RobotPose& robot,
                                const LrfMount& mount, const FrameConfig& f) {
  return body_to_global(spherical_to_body(ps, robot, mount, f), f);
}

}  // namespace lrfsim
