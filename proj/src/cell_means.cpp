#include "skimg/cell_means.hpp"

#include <cmath>

namespace skimg {

namespace {

struct Overlap {
    std::size_t pixel;  // 0-based, already clamped for replication
    double len;
};

// Exact interval overlaps of cell [k/w, (k+1)/w] with the pixel partition of
// [0, n]; portions outside the image are assigned to the nearest edge pixel
// (replication). Lengths per cell always sum to 1/w.
std::vector<std::vector<Overlap>> axis_overlaps(std::size_t n, double w, std::size_t cells) {
    std::vector<std::vector<Overlap>> out(cells);
    const double nd = static_cast<double>(n);
    for (std::size_t k = 0; k < cells; ++k) {
        const double a = k / w;
        const double b = (k + 1) / w;
        auto& segs = out[k];
        const double below = std::min(b, 0.0) - a;
        if (below > 0.0) segs.push_back({0, below});
        const long i_lo = std::max<long>(1, static_cast<long>(std::floor(a)) + 1);
        const long i_hi = std::min<long>(static_cast<long>(n),
                                         static_cast<long>(std::ceil(b)));
        for (long i = i_lo; i <= i_hi; ++i) {
            const double len = std::min(b, static_cast<double>(i)) -
                               std::max(a, static_cast<double>(i - 1));
            if (len > 0.0) segs.push_back({static_cast<std::size_t>(i - 1), len});
        }
        const double above = b - std::max(a, nd);
        if (above > 0.0) segs.push_back({n - 1, above});
    }
    return out;
}

}  // namespace

CellMeanTable cell_means(const GridImage& img, double w, BoundaryPolicy boundary) {
    if (!(w > 0.0)) throw std::invalid_argument("cell width parameter w must be > 0");

    CellMeanTable t;
    t.w = w;
    t.boundary = boundary;
    t.rows = static_cast<std::size_t>(std::ceil(w * static_cast<double>(img.rows)));
    t.cols = static_cast<std::size_t>(std::ceil(w * static_cast<double>(img.cols)));
    t.means.resize(t.rows * t.cols);

    const bool integer_w = w >= 1.0 && w == std::floor(w);
    if (integer_w) {
        // Cells align with pixel edges; every mean is a single pixel value.
        const std::size_t wi = static_cast<std::size_t>(w);
        for (std::size_t k1 = 0; k1 < t.rows; ++k1) {
            const double* src = img.row(k1 / wi);
            double* dst = &t.means[k1 * t.cols];
            for (std::size_t k2 = 0; k2 < t.cols; ++k2) dst[k2] = src[k2 / wi];
        }
        return t;
    }

    const auto ox = axis_overlaps(img.rows, w, t.rows);
    const auto oy = axis_overlaps(img.cols, w, t.cols);
    const double w2 = w * w;
    for (std::size_t k1 = 0; k1 < t.rows; ++k1) {
        double* dst = &t.means[k1 * t.cols];
        for (std::size_t k2 = 0; k2 < t.cols; ++k2) {
            double acc = 0.0;
            for (const Overlap& sx : ox[k1]) {
                const double* row = img.row(sx.pixel);
                double inner = 0.0;
                for (const Overlap& sy : oy[k2]) inner += sy.len * row[sy.pixel];
                acc += sx.len * inner;
            }
            dst[k2] = w2 * acc;
        }
    }
    return t;
}

std::vector<std::pair<double, double>> OutputGrid::points() const {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) pts.emplace_back(coord(i), coord(j));
    }
    return pts;
}

OutputGrid output_grid(std::size_t n, std::size_t m, double R) {
    if (!(R >= 1.0)) throw std::invalid_argument("scaling factor R must be >= 1");
    OutputGrid g;
    g.scale = R;
    g.rows = static_cast<std::size_t>(std::llround(static_cast<double>(n) * R));
    g.cols = static_cast<std::size_t>(std::llround(static_cast<double>(m) * R));
    return g;
}

}  // namespace skimg
