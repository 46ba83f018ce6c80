#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace skimg {

// Non-finite results, quadrature that fails to settle, overflowing outputs.
class numeric_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Dense row-major matrix of doubles.
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> v;

    Mat() = default;
    Mat(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), v(r * c, fill) {}

    double& operator()(std::size_t r, std::size_t c) { return v[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return v[r * cols + c]; }
    double* row(std::size_t r) { return v.data() + r * cols; }
    const double* row(std::size_t r) const { return v.data() + r * cols; }
};

}  // namespace skimg
