#pragma once

#include <cstddef>
#include <string>

namespace lrfsim::kernels {

/// A batch of rays sharing one origin; directions are struct-of-arrays and
/// need not be normalized as long as callers interpret distances in the same
/// scale (the simulator passes unit vectors).
struct RayBatch {
  double ox = 0.0, oy = 0.0, oz = 0.0;
  const double* dx = nullptr;
  const double* dy = nullptr;
  const double* dz = nullptr;
  std::size_t n = 0;
};

/// Vertical cylinder: axis through (cx, cy), lateral radius, z in [z0, z1].
struct CylinderShape {
  double cx, cy, radius, z0, z1;
};

/// Axis-aligned vertical prism: footprint [cx-hx, cx+hx] x [cy-hy, cy+hy],
/// z in [z0, z1].
struct BoxShape {
  double cx, cy, hx, hy, z0, z1;
};

/// Entry distance of each ray into the solid, +infinity on miss. A ray
/// starting inside reports 0.
using RayCylinderFn = void (*)(const RayBatch&, const CylinderShape&, double* t_out);
using RayBoxFn = void (*)(const RayBatch&, const BoxShape&, double* t_out);

/// out[i] = squared distance from (x[i], y[i], z[i]) to (px, py, pz).
using DistSq3Fn = void (*)(std::size_t n, const double* x, const double* y,
                           const double* z, double px, double py, double pz,
                           double* out);

struct KernelTable {
  RayCylinderFn ray_cylinder;
  RayBoxFn ray_box;
  DistSq3Fn dist_sq3;
  const char* name;
};

enum class Kind { Auto, Scalar, Avx2 };

const KernelTable& scalar_table();

/// AVX2 table, or nullptr when the build has no AVX2 variant.
const KernelTable* avx2_table();

bool cpu_has_avx2();

/// Table in use. First call resolves it: LRFSIM_KERNEL=scalar|avx2 wins,
/// otherwise AVX2 when the CPU supports it, scalar otherwise. Both variants
/// produce bit-identical results (equivalence-tested), so the selection
/// never changes simulation output.
const KernelTable& active();

/// Explicit override; Kind::Auto re-resolves from CPU/environment.
/// Throws lrfsim::Error if the requested variant is unavailable.
void select(Kind kind);

Kind parse_kind(const std::string& name);

}  // namespace lrfsim::kernels
