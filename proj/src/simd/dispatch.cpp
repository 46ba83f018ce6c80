#include "skimg/simd/dispatch.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "skimg/simd/kernels_scalar.hpp"

namespace skimg::simd {

namespace {
const Ops kScalarOps = {dot_scalar, scale_scalar, sum_scalar, "scalar"};
}

const Ops& scalar_ops() { return kScalarOps; }

#if defined(SKIMG_HAVE_AVX2_TU)
const Ops* avx2_ops_impl();
const Ops* avx2_ops() {
#if defined(__GNUC__) || defined(__clang__)
    static const bool supported =
        __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    static const bool supported = false;
#endif
    return supported ? avx2_ops_impl() : nullptr;
}
#else
const Ops* avx2_ops() { return nullptr; }
#endif

#if defined(SKIMG_HAVE_NEON_TU)
const Ops* neon_ops_impl();
const Ops* neon_ops() { return neon_ops_impl(); }
#else
const Ops* neon_ops() { return nullptr; }
#endif

namespace {

const Ops* pick_default() {
    if (const Ops* o = avx2_ops()) return o;
    if (const Ops* o = neon_ops()) return o;
    return &kScalarOps;
}

const Ops* pick_named(const char* name) {
    if (std::strcmp(name, "scalar") == 0) return &kScalarOps;
    if (std::strcmp(name, "avx2") == 0) return avx2_ops();
    if (std::strcmp(name, "neon") == 0) return neon_ops();
    if (std::strcmp(name, "auto") == 0) return pick_default();
    return nullptr;
}

std::atomic<const Ops*> g_active{nullptr};

const Ops* resolve() {
    const Ops* cur = g_active.load(std::memory_order_acquire);
    if (cur) return cur;
    const Ops* picked = nullptr;
    if (const char* env = std::getenv("SKIMG_SIMD")) picked = pick_named(env);
    if (!picked) picked = pick_default();
    g_active.store(picked, std::memory_order_release);
    return picked;
}

}  // namespace

const Ops& active() { return *resolve(); }

bool select(const char* name) {
    const Ops* o = pick_named(name);
    if (!o) return false;
    g_active.store(o, std::memory_order_release);
    return true;
}

std::vector<const Ops*> available() {
    std::vector<const Ops*> out{&kScalarOps};
    if (const Ops* o = avx2_ops()) out.push_back(o);
    if (const Ops* o = neon_ops()) out.push_back(o);
    return out;
}

}  // namespace skimg::simd
