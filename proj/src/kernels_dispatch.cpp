#include "lrfsim/kernels.hpp"

#include <atomic>
#include <cstdlib>

#include "lrfsim/errors.hpp"

namespace lrfsim::kernels {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

namespace {

std::atomic<const KernelTable*> g_active{nullptr};

const KernelTable* resolve_auto() {
  if (const char* env = std::getenv("LRFSIM_KERNEL")) {
    const std::string name(env);
    if (name == "scalar") return &scalar_table();
    if (name == "avx2") {
      if (const KernelTable* t = avx2_table(); t && cpu_has_avx2()) return t;
      throw Error("LRFSIM_KERNEL=avx2 but AVX2 is unavailable");
    }
    // Unknown value falls through to auto detection.
  }
  if (const KernelTable* t = avx2_table(); t && cpu_has_avx2()) return t;
  return &scalar_table();
}

}  // namespace

const KernelTable& active() {
  const KernelTable* t = g_active.load(std::memory_order_acquire);
  if (!t) {
    t = resolve_auto();
    g_active.store(t, std::memory_order_release);
  }
  return *t;
}

void select(Kind kind) {
  switch (kind) {
    case Kind::Auto:
      g_active.store(resolve_auto(), std::memory_order_release);
      return;
    case Kind::Scalar:
      g_active.store(&scalar_table(), std::memory_order_release);
      return;
    case Kind::Avx2: {
      const KernelTable* t = avx2_table();
      if (!t || !cpu_has_avx2()) throw Error("AVX2 kernels unavailable on this machine");
      g_active.store(t, std::memory_order_release);
      return;
    }
  }
}

Kind parse_kind(const std::string& name) {
  if (name == "auto") return Kind::Auto;
  if (name == "scalar") return Kind::Scalar;
  if (name == "avx2") return Kind::Avx2;
  throw Error("unknown kernel kind: " + name);
}

}  // namespace lrfsim::kernels
