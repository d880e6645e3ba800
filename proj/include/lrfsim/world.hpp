#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "lrfsim/coords.hpp"
#include "lrfsim/interval.hpp"
#include "lrfsim/kernels.hpp"

namespace lrfsim {

enum class EntityKind { Target, IrrelevantHuman, Obstacle };

struct CylinderFootprint {
  double radius;
};

/// Axis-aligned half extents in x and y.
struct BoxFootprint {
  double hx, hy;
};

/// Timed waypoint: {t, x, y, z_base}. Tracks are piecewise-linear and clamp
/// outside their time span.
using Waypoint = std::array<double, 4>;

/// A 2.5-D world entity: a vertical prism over a cylinder or box footprint,
/// base at the waypoint z, top at z + height.
struct Entity {
  std::string id;
  EntityKind kind = EntityKind::Obstacle;
  std::variant<CylinderFootprint, BoxFootprint> shape{CylinderFootprint{0.5}};
  double height = 1.8;
  std::vector<Waypoint> motion;
};

enum class PolicyKind { Obscured, MapPlanning };

struct StoragePolicy {
  PolicyKind kind = PolicyKind::Obscured;
  double max_retention_range = 30.0;  // obscured
  double grid_resolution = 0.1;       // map
  double grid_extent = 40.0;          // map, full width in meters
};

/// Azimuth sector covered by one face's LRF group, in body-frame angles,
/// unwrapped with hi > lo.
struct FaceSector {
  double lo = 0.0;
  double hi = kPi;
};

struct LrfUnitConfig; // defined in lrf.hpp

struct LockConfig {
  double guard = deg_to_rad(5.0);   // margin added on both sides of the lock
  double reacquire_gate = 0.5;      // meters, centroid association across passes
};

struct LrfGroupConfig {
  BodyPoint upper_mount{0.0, 0.0, 1.05};
  BodyPoint lower_mount{0.0, 0.0, 0.95};
  double upper_zenith = kPi / 2.0;
  double lower_zenith = kPi / 2.0;
  double max_range = 30.0;
  double angular_resolution = deg_to_rad(0.25);
  double range_noise_sigma = 0.0;
};

struct Scenario {
  std::string name;
  FrameConfig frame{};
  std::vector<Waypoint> robot_track{{0.0, 0.0, 0.0, 0.0}};
  LrfGroupConfig group{};
  FaceSector face_body{};
  LockConfig lock{};
  int loss_passes = 3;  // consecutive target-miss passes before unlocking
  std::vector<Entity> entities;
  StoragePolicy policy{};
  std::uint64_t seed = 0;
  double duration = 1.0;
  double step_dt = 0.1;
};

/// Throws SchemaError when invariants do not hold (exactly one target,
/// positive extents, increasing waypoint times, aligned mounts, ...).
void validate_scenario(const Scenario& s);

struct EntityState {
  int index = -1;        // into Scenario::entities
  BodyPoint center{};    // footprint center; z is the base elevation
};

/// World state at one instant; a pure function of (Scenario, time).
/// References the scenario's entity definitions, so it must not outlive it.
struct Scene {
  double time = 0.0;
  RobotPose robot{};
  const Scenario* scenario = nullptr;
  std::vector<EntityState> entities;
};

/// Throws TimeRangeError outside [0, duration].
Scene scene_at(const Scenario& s, double t);

inline constexpr int kNoHit = -1;

struct RayHit {
  double distance = 0.0;
  int entity = kNoHit;
};

/// Nearest intersection of one ray with any entity volume. direction must be
/// normalized. Returns kNoHit with distance +inf when nothing is hit.
RayHit ray_cast(const BodyPoint& origin, const BodyPoint& direction, const Scene& scene);

/// Entry distances of a shared-origin direction batch against every entity,
/// reduced to the nearest hit per ray. Uses the active kernel table.
void ray_cast_batch(const BodyPoint& origin, const kernels::RayBatch& rays,
                    const Scene& scene, double* distance_out, int* entity_out);

/// Dense noiseless reference sweep: rays every `resolution` radians across
/// [az_lo, az_hi] at the given zenith from `exit_point`, clustered exactly on
/// entity identity (no gap tolerance). Independent oracle for the scan-mode
/// extraction path. Azimuths are R0-referenced like sweep azimuths.
std::vector<DetectedCluster> brute_force_intervals(const Scene& scene,
                                                   const BodyPoint& exit_point,
                                                   double zenith, double az_lo,
                                                   double az_hi, double resolution,
                                                   double max_range, double theta_g);

/// True subtended azimuth interval of one entity as seen from a point, from
/// the analytic silhouette (tangents for a cylinder, corner fan for a box).
/// Returns angles unwrapped around the entity's center azimuth.
bool true_subtended_interval(const EntityState& es, const Entity& def,
                             const BodyPoint& from_xy, double* az_lo, double* az_hi);

}  // namespace lrfsim
