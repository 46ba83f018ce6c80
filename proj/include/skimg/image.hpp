#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "skimg/common.hpp"

namespace skimg {

enum class Unit { Celsius, GrayLevel };

const char* to_string(Unit u);
Unit unit_from_string(const std::string& s);

// Rectangular grid of scalar samples (temperatures or gray levels). Pixel
// (r, c), 0-based, covers the half-open box (r, r+1] x (c, c+1] of the
// continuous domain (0, rows] x (0, cols]. Immutable once built.
struct GridImage {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;  // row-major
    Unit unit = Unit::Celsius;
    double resolution = 1e-2;    // measurement resolution P

    double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
    double& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
    const double* row(std::size_t r) const { return values.data() + r * cols; }

    double max_value() const;
    double min_value() const;
    double mean_value() const;

    // Validates dimensions, finiteness of every sample, and P > 0.
    static GridImage make(std::size_t rows, std::size_t cols, std::vector<double> values,
                          Unit unit = Unit::Celsius, double resolution = 1e-2);
    static GridImage constant(std::size_t rows, std::size_t cols, double value,
                              Unit unit = Unit::Celsius, double resolution = 1e-2);
};

}  // namespace skimg
