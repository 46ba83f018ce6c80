#pragma once

#include <cstddef>

// Scalar reference kernels for the arithmetic inner loops. The dispatched SIMD
// variants must agree with these within floating reassociation tolerance; the
// equivalence tests pin that down.

namespace skimg::simd {

inline double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

// dst[i] = s * src[i]
inline void scale_scalar(double* dst, const double* src, double s, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = s * src[i];
}

inline double sum_scalar(const double* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i];
    return acc;
}

}  // namespace skimg::simd
