#pragma once

#include "lrfsim/angles.hpp"
#include "lrfsim/coords.hpp"

namespace lrfsim {

/// Boundary angles of one detected object within a sweep. psi_a is the first
/// boundary angle (start of the interval in sweep order), psi_b the second;
/// both are azimuths referenced to the polar axis R0 and stored in [0, 2*pi).
/// deflection is the counterclockwise angle from the Y-parallel start line to
/// the first boundary line.
struct ScanInterval {
  double psi_a = 0.0;
  double psi_b = 0.0;
  double deflection = 0.0;
};

/// Width |psi_b - psi_a| as the shortest positive sweep from psi_a to psi_b,
/// so an interval stored across the 0/2*pi seam (e.g. 350 deg to 8 deg)
/// reports 18 deg.
inline double scan_angle_range(const ScanInterval& i) {
  return wrap_two_pi(i.psi_b - i.psi_a);
}

/// Interval from the unwrapped sweep azimuths of the first and last touching
/// rays. The deflection start line is the +Y axis (body azimuth pi/2), and
/// sweep azimuths are R0-referenced, hence the +theta_g correction.
inline ScanInterval make_interval(double az_first, double az_last, double theta_g) {
  return {wrap_two_pi(az_first), wrap_two_pi(az_last),
          wrap_two_pi(az_first + theta_g - kPi / 2.0)};
}

/// One object extracted from a sweep: its entity tag, boundary-angle
/// interval, and the mean body position of the touching samples. az_lo/az_hi
/// keep the unwrapped sweep azimuths for window arithmetic.
struct DetectedCluster {
  int entity = -1;
  ScanInterval interval{};
  BodyPoint centroid{};
  int n_hits = 0;
  double az_lo = 0.0;
  double az_hi = 0.0;
};

}  // namespace lrfsim
