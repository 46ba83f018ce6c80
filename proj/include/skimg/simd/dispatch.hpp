#pragma once

#include <cstddef>
#include <vector>

namespace skimg::simd {

// One vtable per implementation; the engine always calls through the active one.
struct Ops {
    double (*dot)(const double* a, const double* b, std::size_t n);
    void (*scale)(double* dst, const double* src, double s, std::size_t n);
    double (*sum)(const double* a, std::size_t n);
    const char* name;
};

const Ops& scalar_ops();

// Null when the variant was not compiled in or the CPU lacks the feature.
const Ops* avx2_ops();
const Ops* neon_ops();

// Runtime-selected implementation. Picks the widest available variant unless
// the SKIMG_SIMD environment variable ("scalar", "avx2", "neon", "auto")
// overrides the choice. Resolved once, then cached.
const Ops& active();

// Test hook: force an implementation by name. Returns false (and leaves the
// selection unchanged) when the variant is unavailable. Not safe to call while
// an evaluation is running.
bool select(const char* name);

// Every implementation the current process can run, scalar first.
std::vector<const Ops*> available();

}  // namespace skimg::simd
