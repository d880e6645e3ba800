#include "lrfsim/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

#include "kernel_lanes.hpp"

namespace lrfsim::kernels {

namespace {

// 4-lane doubles mirroring kernel_lanes.hpp expression for expression.
// No FMA: contraction would break bitwise agreement with the scalar path.

inline __m256d vsel(__m256d mask, __m256d a, __m256d b) {
  return _mm256_blendv_pd(b, a, mask);
}

inline __m256d vneg(__m256d a) { return _mm256_xor_pd(a, _mm256_set1_pd(-0.0)); }

inline __m256d bool_mask(bool b) {
  return _mm256_castsi256_pd(_mm256_set1_epi64x(b ? -1 : 0));
}

struct SlabV {
  __m256d lo, hi;
};

// o, lo, hi are uniform across the batch (shared ray origin); d is per lane.
inline SlabV slab(double o, __m256d d, double lo, double hi) {
  const __m256d inf = _mm256_set1_pd(lanes::kInf);
  const __m256d ninf = vneg(inf);
  const __m256d invd = _mm256_div_pd(_mm256_set1_pd(1.0), d);
  const __m256d t1 = _mm256_mul_pd(_mm256_set1_pd(lo - o), invd);
  const __m256d t2 = _mm256_mul_pd(_mm256_set1_pd(hi - o), invd);
  const __m256d parallel = _mm256_cmp_pd(d, _mm256_setzero_pd(), _CMP_EQ_OQ);
  const __m256d inside = bool_mask(o >= lo && o <= hi);
  SlabV s;
  s.lo = vsel(parallel, vsel(inside, ninf, inf), _mm256_min_pd(t1, t2));
  s.hi = vsel(parallel, vsel(inside, inf, ninf), _mm256_max_pd(t1, t2));
  return s;
}

inline __m256d finish(__m256d enter, __m256d exit) {
  const __m256d zero = _mm256_setzero_pd();
  const __m256d hit = _mm256_and_pd(_mm256_cmp_pd(enter, exit, _CMP_LE_OQ),
                                    _mm256_cmp_pd(exit, zero, _CMP_GE_OQ));
  const __m256d t = _mm256_add_pd(_mm256_max_pd(enter, zero), zero);
  return vsel(hit, t, _mm256_set1_pd(lanes::kMiss));
}

void ray_cylinder_avx2(const RayBatch& rays, const CylinderShape& cyl, double* t_out) {
  const double relx = rays.ox - cyl.cx;
  const double rely = rays.oy - cyl.cy;
  const double r2 = cyl.radius * cyl.radius;
  const double c_lane = relx * relx + rely * rely - r2;

  const __m256d inf = _mm256_set1_pd(lanes::kInf);
  const __m256d ninf = vneg(inf);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d vrelx = _mm256_set1_pd(relx);
  const __m256d vrely = _mm256_set1_pd(rely);
  const __m256d vc = _mm256_set1_pd(c_lane);
  const __m256d c_nonpos = bool_mask(c_lane <= 0.0);

  std::size_t i = 0;
  for (; i + 4 <= rays.n; i += 4) {
    const __m256d dx = _mm256_loadu_pd(rays.dx + i);
    const __m256d dy = _mm256_loadu_pd(rays.dy + i);
    const __m256d dz = _mm256_loadu_pd(rays.dz + i);

    const __m256d a = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    const __m256d b = _mm256_add_pd(_mm256_mul_pd(vrelx, dx), _mm256_mul_pd(vrely, dy));
    const __m256d disc = _mm256_sub_pd(_mm256_mul_pd(b, b), _mm256_mul_pd(a, vc));
    const __m256d s = _mm256_sqrt_pd(disc);
    const __m256d inva = _mm256_div_pd(_mm256_set1_pd(1.0), a);
    const __m256d nb = vneg(b);
    const __m256d t1 = _mm256_mul_pd(_mm256_sub_pd(nb, s), inva);
    const __m256d t2 = _mm256_mul_pd(_mm256_add_pd(nb, s), inva);

    const __m256d lateral_hit = _mm256_and_pd(_mm256_cmp_pd(a, zero, _CMP_GT_OQ),
                                              _mm256_cmp_pd(disc, zero, _CMP_GE_OQ));
    const __m256d vertical_inside =
        _mm256_and_pd(_mm256_cmp_pd(a, zero, _CMP_EQ_OQ), c_nonpos);
    const __m256d lat_lo = vsel(vertical_inside, ninf, vsel(lateral_hit, t1, inf));
    const __m256d lat_hi = vsel(vertical_inside, inf, vsel(lateral_hit, t2, ninf));

    const SlabV z = slab(rays.oz, dz, cyl.z0, cyl.z1);
    _mm256_storeu_pd(t_out + i,
                     finish(_mm256_max_pd(lat_lo, z.lo), _mm256_min_pd(lat_hi, z.hi)));
  }
  for (; i < rays.n; ++i) {
    t_out[i] = lanes::ray_cylinder(relx, rely, rays.oz, rays.dx[i], rays.dy[i],
                                   rays.dz[i], r2, cyl.z0, cyl.z1);
  }
}

void ray_box_avx2(const RayBatch& rays, const BoxShape& box, double* t_out) {
  const double x0 = box.cx - box.hx, x1 = box.cx + box.hx;
  const double y0 = box.cy - box.hy, y1 = box.cy + box.hy;

  std::size_t i = 0;
  for (; i + 4 <= rays.n; i += 4) {
    const SlabV sx = slab(rays.ox, _mm256_loadu_pd(rays.dx + i), x0, x1);
    const SlabV sy = slab(rays.oy, _mm256_loadu_pd(rays.dy + i), y0, y1);
    const SlabV sz = slab(rays.oz, _mm256_loadu_pd(rays.dz + i), box.z0, box.z1);
    const __m256d enter = _mm256_max_pd(sx.lo, _mm256_max_pd(sy.lo, sz.lo));
    const __m256d exit = _mm256_min_pd(sx.hi, _mm256_min_pd(sy.hi, sz.hi));
    _mm256_storeu_pd(t_out + i, finish(enter, exit));
  }
  for (; i < rays.n; ++i) {
    t_out[i] = lanes::ray_box(rays.ox, rays.oy, rays.oz, rays.dx[i], rays.dy[i],
                              rays.dz[i], x0, x1, y0, y1, box.z0, box.z1);
  }
}

void dist_sq3_avx2(std::size_t n, const double* x, const double* y, const double* z,
                   double px, double py, double pz, double* out) {
  const __m256d vpx = _mm256_set1_pd(px);
  const __m256d vpy = _mm256_set1_pd(py);
  const __m256d vpz = _mm256_set1_pd(pz);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(x + i), vpx);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(y + i), vpy);
    const __m256d dz = _mm256_sub_pd(_mm256_loadu_pd(z + i), vpz);
    const __m256d sum = _mm256_add_pd(
        _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)),
        _mm256_mul_pd(dz, dz));
    _mm256_storeu_pd(out + i, sum);
  }
  for (; i < n; ++i) out[i] = lanes::dist_sq3(x[i], y[i], z[i], px, py, pz);
}

}  // namespace

const KernelTable* avx2_table() {
  static const KernelTable table{ray_cylinder_avx2, ray_box_avx2, dist_sq3_avx2, "avx2"};
  return &table;
}

}  // namespace lrfsim::kernels

#else  // !__AVX2__

namespace lrfsim::kernels {

const KernelTable* avx2_table() { return nullptr; }

}  // namespace lrfsim::kernels

#endif
