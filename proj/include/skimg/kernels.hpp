#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "skimg/common.hpp"

namespace skimg {

// sin(pi x) / (pi x), with a series fallback near zero. Equals 1 at x = 0.
double sinc(double x);

// base^exp by repeated squaring. Exact for the small integer exponents used here.
double powi(double base, unsigned exp);

enum class KernelFamily { Fejer, Jackson, BSpline };

// Controls the quadrature that produces the Jackson normalization constant.
// The integration domain is derived from the |u|^{-2k} tail decay so that the
// neglected tails contribute less than tail_tolerance; domains the tail rule
// would push past max_halfwidth are capped there and finished with an
// averaged-tail correction (only slowly decaying low orders need it).
struct QuadratureSpec {
    double tail_tolerance = 1e-10;
    double max_halfwidth = 1e5;
    double consistency_tolerance = 1e-8;  // required agreement under step halving
};

struct UnivariateKernel {
    KernelFamily family = KernelFamily::Fejer;
    double support_radius = std::numeric_limits<double>::infinity();
    double normalization = 1.0;  // c_k for Jackson kernels, 1 otherwise
    int bspline_order = 0;
    int jackson_k = 0;
    double jackson_alpha = 1.0;
    double jackson_arg_scale = 0.0;  // 1 / (2 k pi alpha)

    double evaluate(double x) const;
    bool bounded() const { return std::isfinite(support_radius); }
};

// Product of univariate factors, one per axis.
struct MultivariateKernel {
    std::vector<UnivariateKernel> factors;

    std::size_t dims() const { return factors.size(); }
    double evaluate(const double* x, std::size_t n) const;
    double evaluate2(double x, double y) const {
        return factors[0].evaluate(x) * factors[1].evaluate(y);
    }
};

UnivariateKernel make_fejer();
UnivariateKernel make_bspline(int order);
UnivariateKernel make_jackson(int k, double alpha = 1.0, const QuadratureSpec& quad = {});
MultivariateKernel product_kernel(std::vector<UnivariateKernel> factors);

// "fejer" | "bspline:<s>" | "jackson:<k>[:<alpha>]"
UnivariateKernel parse_kernel(const std::string& spec);
std::string kernel_name(const UnivariateKernel& kern);

// Finite test lattice on which the kernel conditions are estimated:
// u = i / u_steps for i in [0, u_steps), lattice sum truncated to |k| <= k_range.
struct GridSpec {
    int u_steps = 100;
    long k_range = 200;
};

struct KernelAxiomReport {
    double summability_estimate = 0.0;              // max_u of sum |kern(u - k)|
    double partition_of_unity_max_deviation = 0.0;  // max_u of |sum kern(u - k) - 1|
    double moment_beta = 0.0;
    double moment_estimate = 0.0;                   // max_u of sum |kern(u-k)| |u-k|^beta
    std::string grid_spec;
};

// Numerical estimates on a finite grid, not proofs. Bounded-support kernels are
// summed exactly; unbounded ones are truncated to the grid's k_range.
KernelAxiomReport check_axioms(const UnivariateKernel& kern, double beta,
                               const GridSpec& grid = {});

}  // namespace skimg
