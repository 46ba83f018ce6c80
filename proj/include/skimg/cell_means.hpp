#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "skimg/common.hpp"
#include "skimg/image.hpp"

namespace skimg {

enum class BoundaryPolicy { Replicate };

// Means of the image step function over the cells
// [k1/w, (k1+1)/w] x [k2/w, (k2+1)/w], for every cell with positive-measure
// intersection with the image domain; k1 in [0, ceil(w*rows)), k2 likewise.
// Cells that stick out past the boundary are filled by replicating the nearest
// pixel value. Entries are exact area-weighted averages (piecewise-constant
// integration, no quadrature).
struct CellMeanTable {
    double w = 1.0;
    std::size_t rows = 0;  // admissible k1 count
    std::size_t cols = 0;  // admissible k2 count
    std::vector<double> means;  // row-major
    BoundaryPolicy boundary = BoundaryPolicy::Replicate;

    double at(std::size_t k1, std::size_t k2) const { return means[k1 * cols + k2]; }
    const double* row(std::size_t k1) const { return means.data() + k1 * cols; }
};

CellMeanTable cell_means(const GridImage& img, double w,
                         BoundaryPolicy boundary = BoundaryPolicy::Replicate);

// Evaluation grid of the reconstructed image: round(n*R) x round(m*R) points,
// output index (i, j) (0-based) sitting at ((i+0.5)/R, (j+0.5)/R) in the
// continuous domain.
struct OutputGrid {
    std::size_t rows = 0;
    std::size_t cols = 0;
    double scale = 1.0;  // R

    double coord(std::size_t i) const { return (static_cast<double>(i) + 0.5) / scale; }
    std::vector<std::pair<double, double>> points() const;
};

OutputGrid output_grid(std::size_t n, std::size_t m, double R);

}  // namespace skimg
