#include "skimg/image.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace skimg {

const char* to_string(Unit u) { return u == Unit::Celsius ? "celsius" : "graylevel"; }

Unit unit_from_string(const std::string& s) {
    if (s == "celsius") return Unit::Celsius;
    if (s == "graylevel" || s == "gray") return Unit::GrayLevel;
    throw std::invalid_argument("unknown unit tag: " + s);
}

double GridImage::max_value() const { return *std::max_element(values.begin(), values.end()); }

double GridImage::min_value() const { return *std::min_element(values.begin(), values.end()); }

double GridImage::mean_value() const {
    return std::accumulate(values.begin(), values.end(), 0.0) / values.size();
}

GridImage GridImage::make(std::size_t rows, std::size_t cols, std::vector<double> values,
                          Unit unit, double resolution) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("image dimensions must be >= 1");
    if (values.size() != rows * cols) {
        throw std::invalid_argument("image value count does not match dimensions");
    }
    if (!(resolution > 0.0)) throw std::invalid_argument("measurement resolution must be > 0");
    for (double v : values) {
        if (!std::isfinite(v)) throw std::invalid_argument("image contains non-finite samples");
    }
    GridImage img;
    img.rows = rows;
    img.cols = cols;
    img.values = std::move(values);
    img.unit = unit;
    img.resolution = resolution;
    return img;
}

GridImage GridImage::constant(std::size_t rows, std::size_t cols, double value, Unit unit,
                              double resolution) {
    return make(rows, cols, std::vector<double>(rows * cols, value), unit, resolution);
}

}  // namespace skimg
