// NEON variants of the inner-loop kernels (aarch64 baseline, no extra flags).

#include "skimg/simd/dispatch.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace skimg::simd {
namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
    }
    for (; i + 2 <= n; i += 2) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    }
    double s = vaddvq_f64(acc0) + vaddvq_f64(acc1);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

void scale_neon(double* dst, const double* src, double s, std::size_t n) {
    const float64x2_t vs = vdupq_n_f64(s);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(dst + i, vmulq_f64(vs, vld1q_f64(src + i)));
    }
    for (; i < n; ++i) dst[i] = s * src[i];
}

double sum_neon(const double* a, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        acc = vaddq_f64(acc, vld1q_f64(a + i));
    }
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += a[i];
    return s;
}

const Ops kNeonOps = {dot_neon, scale_neon, sum_neon, "neon"};

}  // namespace

const Ops* neon_ops_impl() { return &kNeonOps; }

}  // namespace skimg::simd

#else
#error "kernels_neon.cpp is aarch64-only"
#endif
