#include "lrfsim/world.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lrfsim/errors.hpp"

namespace lrfsim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

BodyPoint interpolate_track(const std::vector<Waypoint>& track, double t) {
  if (track.front()[0] >= t) return {track.front()[1], track.front()[2], track.front()[3]};
  if (track.back()[0] <= t) return {track.back()[1], track.back()[2], track.back()[3]};
  auto hi = std::upper_bound(track.begin(), track.end(), t,
                             [](double v, const Waypoint& w) { return v < w[0]; });
  auto lo = hi - 1;
  const double u = (t - (*lo)[0]) / ((*hi)[0] - (*lo)[0]);
  return {(*lo)[1] + u * ((*hi)[1] - (*lo)[1]), (*lo)[2] + u * ((*hi)[2] - (*lo)[2]),
          (*lo)[3] + u * ((*hi)[3] - (*lo)[3])};
}

void require(bool ok, const std::string& what) {
  if (!ok) throw SchemaError(what);
}

void check_track(const std::vector<Waypoint>& track, const std::string& owner) {
  require(!track.empty(), owner + ": motion track must have at least one waypoint");
  for (std::size_t i = 1; i < track.size(); ++i) {
    require(track[i][0] > track[i - 1][0], owner + ": waypoint times must strictly increase");
  }
}

}  // namespace

void validate_scenario(const Scenario& s) {
  require(s.duration >= 0.0, "duration must be >= 0");
  require(s.step_dt > 0.0, "step_dt must be > 0");
  require(s.group.max_range > 0.0, "group.max_range must be > 0");
  require(s.group.angular_resolution > 0.0, "group.resolution_deg must be > 0");
  require(s.group.range_noise_sigma >= 0.0, "group.sigma must be >= 0");
  require(s.group.upper_mount.x == s.group.lower_mount.x &&
              s.group.upper_mount.y == s.group.lower_mount.y,
          "group mounts must share x and y (same Z-axis line)");
  require(s.face_body.hi > s.face_body.lo, "face sector must have positive width");
  require(s.face_body.hi - s.face_body.lo <= kTwoPi + 1e-12,
          "face sector wider than a full turn");
  require(s.loss_passes >= 1, "loss_passes must be >= 1");
  require(s.lock.guard >= 0.0, "guard_deg must be >= 0");
  check_track(s.robot_track, "robot_track");

  int targets = 0;
  for (const Entity& e : s.entities) {
    check_track(e.motion, "entity " + e.id);
    require(e.height > 0.0, "entity " + e.id + ": height must be > 0");
    if (const auto* cyl = std::get_if<CylinderFootprint>(&e.shape)) {
      require(cyl->radius > 0.0, "entity " + e.id + ": radius must be > 0");
    } else {
      const auto& box = std::get<BoxFootprint>(e.shape);
      require(box.hx > 0.0 && box.hy > 0.0,
              "entity " + e.id + ": half extents must be > 0");
    }
    if (e.kind == EntityKind::Target) ++targets;
  }
  require(targets == 1, "scenario must contain exactly one target entity");

  if (s.policy.kind == PolicyKind::Obscured) {
    require(s.policy.max_retention_range > 0.0, "policy.max_retention_range must be > 0");
  } else {
    require(s.policy.grid_resolution > 0.0, "policy.grid_resolution must be > 0");
    require(s.policy.grid_extent > 0.0, "policy.grid_extent must be > 0");
  }
}

Scene scene_at(const Scenario& s, double t) {
  if (t < 0.0 || t > s.duration) {
    throw TimeRangeError("scene time " + std::to_string(t) + " outside [0, " +
                         std::to_string(s.duration) + "]");
  }
  Scene scene;
  scene.time = t;
  scene.scenario = &s;
  scene.robot = {interpolate_track(s.robot_track, t), t};
  scene.entities.reserve(s.entities.size());
  for (std::size_t i = 0; i < s.entities.size(); ++i) {
    scene.entities.push_back({static_cast<int>(i), interpolate_track(s.entities[i].motion, t)});
  }
  return scene;
}

void ray_cast_batch(const BodyPoint& origin, const kernels::RayBatch& rays,
                    const Scene& scene, double* distance_out, int* entity_out) {
  std::fill(distance_out, distance_out + rays.n, kInf);
  std::fill(entity_out, entity_out + rays.n, kNoHit);

  kernels::RayBatch batch = rays;
  batch.ox = origin.x;
  batch.oy = origin.y;
  batch.oz = origin.z;

  const kernels::KernelTable& k = kernels::active();
  std::vector<double> t(rays.n);
  for (const EntityState& es : scene.entities) {
    const Entity& def = scene.scenario->entities[es.index];
    const double z0 = es.center.z;
    const double z1 = es.center.z + def.height;
    if (const auto* cyl = std::get_if<CylinderFootprint>(&def.shape)) {
      k.ray_cylinder(batch, {es.center.x, es.center.y, cyl->radius, z0, z1}, t.data());
    } else {
      const auto& box = std::get<BoxFootprint>(def.shape);
      k.ray_box(batch, {es.center.x, es.center.y, box.hx, box.hy, z0, z1}, t.data());
    }
    for (std::size_t i = 0; i < rays.n; ++i) {
      if (t[i] < distance_out[i]) {
        distance_out[i] = t[i];
        entity_out[i] = es.index;
      }
    }
  }
}

RayHit ray_cast(const BodyPoint& origin, const BodyPoint& direction, const Scene& scene) {
  kernels::RayBatch rays;
  rays.dx = &direction.x;
  rays.dy = &direction.y;
  rays.dz = &direction.z;
  rays.n = 1;
  RayHit hit;
  ray_cast_batch(origin, rays, scene, &hit.distance, &hit.entity);
  return hit;
}

std::vector<DetectedCluster> brute_force_intervals(const Scene& scene,
                                                   const BodyPoint& exit_point,
                                                   double zenith, double az_lo,
                                                   double az_hi, double resolution,
                                                   double max_range, double theta_g) {
  std::vector<DetectedCluster> out;
  if (az_hi <= az_lo) return out;
  const auto steps = static_cast<std::size_t>(
      std::floor((az_hi - az_lo) / resolution + 1e-9));

  int current = kNoHit;
  DetectedCluster cluster;
  double sum_x = 0.0, sum_y = 0.0, sum_z = 0.0;
  auto close_cluster = [&] {
    if (current == kNoHit) return;
    cluster.centroid = {sum_x / cluster.n_hits, sum_y / cluster.n_hits,
                        sum_z / cluster.n_hits};
    cluster.interval = make_interval(cluster.az_lo, cluster.az_hi, theta_g);
    out.push_back(cluster);
    current = kNoHit;
  };

  for (std::size_t i = 0; i <= steps; ++i) {
    const double az = az_lo + static_cast<double>(i) * resolution;
    const BodyPoint dir = spherical_direction(az, zenith, theta_g);
    const RayHit hit = ray_cast(exit_point, dir, scene);
    const bool is_hit = hit.entity != kNoHit && hit.distance <= max_range;
    if (!is_hit || hit.entity != current) close_cluster();
    if (!is_hit) continue;
    if (current == kNoHit) {
      current = hit.entity;
      cluster = DetectedCluster{};
      cluster.entity = hit.entity;
      cluster.az_lo = az;
      cluster.n_hits = 0;
      sum_x = sum_y = sum_z = 0.0;
    }
    cluster.az_hi = az;
    ++cluster.n_hits;
    sum_x += exit_point.x + dir.x * hit.distance;
    sum_y += exit_point.y + dir.y * hit.distance;
    sum_z += exit_point.z + dir.z * hit.distance;
  }
  close_cluster();
  return out;
}

bool true_subtended_interval(const EntityState& es, const Entity& def,
                             const BodyPoint& from_xy, double* az_lo, double* az_hi) {
  const double dx = es.center.x - from_xy.x;
  const double dy = es.center.y - from_xy.y;
  const double center_az = std::atan2(dy, dx);
  if (const auto* cyl = std::get_if<CylinderFootprint>(&def.shape)) {
    const double d = std::hypot(dx, dy);
    if (d <= cyl->radius) return false;  // observer inside the footprint
    const double half = std::asin(cyl->radius / d);
    *az_lo = center_az - half;
    *az_hi = center_az + half;
    return true;
  }
  const auto& box = std::get<BoxFootprint>(def.shape);
  double lo = kInf, hi = -kInf;
  for (int sx = -1; sx <= 1; sx += 2) {
    for (int sy = -1; sy <= 1; sy += 2) {
      const double cx = dx + sx * box.hx;
      const double cy = dy + sy * box.hy;
      if (cx == 0.0 && cy == 0.0) return false;
      // unwrap each corner azimuth near the center azimuth
      double a = std::atan2(cy, cx);
      while (a < center_az - kPi) a += kTwoPi;
      while (a > center_az + kPi) a -= kTwoPi;
      lo = std::min(lo, a);
      hi = std::max(hi, a);
    }
  }
  if (hi - lo >= kPi) return false;  // observer inside or degenerate view
  *az_lo = lo;
  *az_hi = hi;
  return true;
}

}  // namespace lrfsim
