#pragma once

#include <optional>
#include <string>
#include <utility>

#include "skimg/cell_means.hpp"
#include "skimg/common.hpp"
#include "skimg/image.hpp"
#include "skimg/kernels.hpp"

namespace skimg {

// Recompute: kernel weights are rebuilt for every output point.
// PrecomputeTruncate: weights are built once per fractional-offset class of
// output points, entries below the truncation threshold are zeroed, and the
// cached rows are reused for every point of the class.
enum class Strategy { Recompute, PrecomputeTruncate };

const char* to_string(Strategy s);
Strategy strategy_from_string(const std::string& s);

struct EnhanceConfig {
    double w = 15.0;
    double R = 2.0;
    MultivariateKernel kernel;
    Strategy strategy = Strategy::PrecomputeTruncate;
    // Replaces the resolution-derived threshold when set. 0 disables truncation.
    std::optional<double> truncation_override;
    // Lattice window half-width for kernels without compact support; infinity
    // means the window spans every admissible cell. The lattice sum must be
    // finite before any truncation threshold applies.
    double unbounded_eval_radius = 40.0;
    int threads = 0;  // 0: SK_THREADS env var, else hardware concurrency
    BoundaryPolicy boundary = BoundaryPolicy::Replicate;
};

struct EnhanceResult {
    GridImage image;
    double applied_truncation = 0.0;     // threshold actually used to zero weights
    double neglected_term_bound = 0.0;   // worst-case contribution of zeroed terms
    Strategy strategy_used = Strategy::PrecomputeTruncate;
    double elapsed_seconds = 0.0;        // mean table + weights + evaluation, no I/O
    double est_memory_bits = 0.0;        // closed-form estimate for the strategy used
    int threads_used = 1;
};

// Threshold below which precomputed kernel weights may be zeroed:
// 0.4 * P / (w^2 * N * M * A) with A the maximum sample. 0 when A <= 0.
double truncation_threshold(const GridImage& img, double w);

// Closed-form kernel memory estimates in bits for the two strategies:
// {N*M*w^2*B, N*M*w^2*R^2*B}.
std::pair<double, double> memory_estimate(const GridImage& img, const EnhanceConfig& cfg,
                                          int bits);

EnhanceResult enhance(const GridImage& img, const EnhanceConfig& cfg);

// Evaluation core, also usable with mean tables built by other means. Output
// value at x = sum_k chi(w x - k) mean_k over the admissible window, divided
// by the window's weight sum so that truncated and boundary-clipped windows
// still reproduce constants.
Mat evaluate_operator(const CellMeanTable& means, const MultivariateKernel& kernel,
                      const OutputGrid& grid, Strategy strategy, double truncation,
                      double unbounded_radius, int threads, int* threads_used = nullptr);

// Named configuration presets; "paper-thermo" is the thermographic-survey
// production setting (bivariate Jackson k=12, w=15, R=2, precompute strategy,
// truncation override 1e-4).
EnhanceConfig preset(const std::string& name);

}  // namespace skimg
