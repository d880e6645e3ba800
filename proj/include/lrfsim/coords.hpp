#pragma once

#include "lrfsim/angles.hpp"
#include "lrfsim/errors.hpp"

namespace lrfsim {

/// Point in the GXGYGZ positioning frame. gx runs north, gy east, gz up;
/// both horizontal axes are treated as local meters (flat earth at task
/// scale), not geodetic degrees.
struct GlobalPoint {
  double gx = 0.0;
  double gy = 0.0;
  double gz = 0.0;
};

/// Point in the XYZ following frame, fixed at task start: x robot-right,
/// y robot-forward, z up. Origin is the robot's geometric center at start.
struct BodyPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Point in the detection spherical frame at an LRF light-exit point.
/// phi is the counterclockwise azimuth from the polar axis R0 (held parallel
/// to GX for the whole task), theta the zenith from +Z.
struct SphericalPoint {
  double r = 0.0;      // meters, >= 0
  double phi = 0.0;    // radians, [0, 2*pi)
  double theta = 0.0;  // radians, [0, pi]
};

/// Static relationship between the GXGYGZ and XYZ frames, frozen at task
/// start. theta_g is the counterclockwise plane angle between GX and X.
struct FrameConfig {
  double theta_g = 0.0;
  GlobalPoint global_origin{};
};

/// Light-exit point of one LRF, relative to the robot geometric center,
/// expressed in XYZ axes.
struct LrfMount {
  BodyPoint offset{};
};

/// Robot geometric center in the XYZ frame at a given time.
struct RobotPose {
  BodyPoint position{};
  double time = 0.0;
};

inline BodyPoint lrf_exit_point(const RobotPose& robot, const LrfMount& mount) {
  return {robot.position.x + mount.offset.x, robot.position.y + mount.offset.y,
          robot.position.z + mount.offset.z};
}

/// XYZ -> GXGYGZ. Planar rotation of (x, y) by -theta_g plus the global
/// origin; z is pure translation.
GlobalPoint body_to_global(const BodyPoint& p, const FrameConfig& f);

/// GXGYGZ -> XYZ. Exact algebraic inverse of body_to_global.
BodyPoint global_to_body(const GlobalPoint& g, const FrameConfig& f);

/// Translation from the LRF-exit-origin Cartesian frame into the robot-center
/// XYZ frame.
BodyPoint lrf_frame_to_body(const BodyPoint& p_lrf, const LrfMount& mount);

/// Inverse of lrf_frame_to_body.
BodyPoint body_to_lrf_frame(const BodyPoint& p_body, const LrfMount& mount);

/// XYZ -> spherical frame at the exit point robot.position + mount.offset.
/// phi is referenced to R0 (GX-parallel), so the body-frame planar angle is
/// corrected by -theta_g. Points on the local Z axis get phi = 0.
/// Throws ZeroRangeError when pa coincides with the exit point.
SphericalPoint body_to_spherical(const BodyPoint& pa, const RobotPose& robot,
                                 const LrfMount& mount, const FrameConfig& f);

/// Spherical frame at the exit point -> XYZ.
BodyPoint spherical_to_body(const SphericalPoint& ps, const RobotPose& robot,
                            const LrfMount& mount, const FrameConfig& f);

/// Unit direction in XYZ axes of a ray with spherical angles (phi, theta),
/// phi referenced to R0. Equals spherical_to_body of (1, phi, theta) with no
/// translation.
BodyPoint spherical_direction(double phi, double theta, double theta_g);

/// GXGYGZ -> spherical, composed through the XYZ hub frame (no direct
/// formula; XYZ is the link bridge).
SphericalPoint global_to_spherical(const GlobalPoint& g, const RobotPose& robot,
                                   const LrfMount& mount, const FrameConfig& f);

/// Spherical -> GXGYGZ, composed through the XYZ hub frame.
GlobalPoint spherical_to_global(const SphericalPoint& ps, const RobotPose& robot,
                                const LrfMount& mount, const FrameConfig& f);

}  // namespace lrfsim
