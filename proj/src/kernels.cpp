#include "skimg/kernels.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace skimg {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Binomial coefficient as double; arguments stay tiny (n <= ~60).
double binomial(int n, int k) {
    double b = 1.0;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

double bspline_eval(int s, double x) {
    if (2.0 * std::abs(x) >= static_cast<double>(s)) return 0.0;  // compact support, exact
    double sum = 0.0;
    double binom = 1.0;  // C(s, i) built incrementally
    for (int i = 0; i <= s; ++i) {
        const double t = 0.5 * s + x - i;
        if (t > 0.0) {
            const double term = binom * powi(t, static_cast<unsigned>(s - 1));
            sum += (i & 1) ? -term : term;
        }
        binom = binom * (s - i) / (i + 1);
    }
    double fact = 1.0;
    for (int j = 2; j < s; ++j) fact *= j;
    return sum / fact;
}

// Integral of sinc^p over the real line, p even. Composite trapezoid with step
// 1/p (below the aliasing limit of the band-limited integrand, so the only
// error left is domain truncation), plus an averaged-tail correction using the
// mean of sin^p over a period.
double sinc_power_integral(int p, const QuadratureSpec& q, double* est_error) {
    const double tol = q.tail_tolerance;
    // Raw tail bound: 2 * pi^-p * T^(1-p) / (p-1) <= tol.
    double t_half = std::pow(2.0 / ((p - 1) * tol * std::pow(kPi, p)), 1.0 / (p - 1));
    t_half = std::clamp(t_half, 30.0, q.max_halfwidth);

    const double avg_sin_p = binomial(p, p / 2) / std::pow(2.0, p);

    auto trapezoid = [&](double h) {
        const long j_max = static_cast<long>(std::ceil(t_half / h));
        double acc = 1.0;  // j = 0 term, sinc(0)^p
        for (long j = 1; j <= j_max; ++j) {
            acc += 2.0 * powi(sinc(j * h), static_cast<unsigned>(p));
        }
        const double t_end = j_max * h;
        const double tail = 2.0 * avg_sin_p * std::pow(kPi, -p) *
                            std::pow(t_end, 1.0 - p) / (p - 1);
        return acc * h + tail;
    };

    const double h = 1.0 / p;
    const double coarse = trapezoid(h);
    const double fine = trapezoid(h / 2.0);
    if (est_error) *est_error = std::abs(fine - coarse);
    if (!(std::abs(fine - coarse) <= q.consistency_tolerance)) {
        throw numeric_error("jackson normalization quadrature did not settle: |delta|=" +
                            std::to_string(std::abs(fine - coarse)) + " for sinc^" +
                            std::to_string(p));
    }
    return fine;
}

}  // namespace

double sinc(double x) {
    const double y = kPi * x;
    if (std::abs(y) < 1e-4) {
        const double y2 = y * y;
        return 1.0 - y2 / 6.0 + y2 * y2 / 120.0;
    }
    return std::sin(y) / y;
}

double powi(double base, unsigned exp) {
    double result = 1.0;
    double b = base;
    while (exp != 0) {
        if (exp & 1u) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

double UnivariateKernel::evaluate(double x) const {
    switch (family) {
        case KernelFamily::Fejer: {
            const double s = sinc(0.5 * x);
            return 0.5 * s * s;
        }
        case KernelFamily::Jackson:
            return normalization *
                   powi(sinc(x * jackson_arg_scale), static_cast<unsigned>(2 * jackson_k));
        case KernelFamily::BSpline:
            return bspline_eval(bspline_order, x);
    }
    return 0.0;
}

double MultivariateKernel::evaluate(const double* x, std::size_t n) const {
    double p = 1.0;
    for (std::size_t i = 0; i < n && i < factors.size(); ++i) {
        p *= factors[i].evaluate(x[i]);
        if (p == 0.0) return 0.0;
    }
    return p;
}

UnivariateKernel make_fejer() {
    UnivariateKernel k;
    k.family = KernelFamily::Fejer;
    k.support_radius = std::numeric_limits<double>::infinity();
    k.normalization = 1.0;
    return k;
}

UnivariateKernel make_bspline(int order) {
    if (order < 1) throw std::invalid_argument("bspline order must be >= 1");
    UnivariateKernel k;
    k.family = KernelFamily::BSpline;
    k.bspline_order = order;
    k.support_radius = 0.5 * order;
    k.normalization = 1.0;
    return k;
}

UnivariateKernel make_jackson(int k, double alpha, const QuadratureSpec& quad) {
    if (k < 1) throw std::invalid_argument("jackson order k must be >= 1");
    if (alpha < 1.0) throw std::invalid_argument("jackson alpha must be >= 1");
    double est_err = 0.0;
    const double integral = sinc_power_integral(2 * k, quad, &est_err);
    UnivariateKernel kern;
    kern.family = KernelFamily::Jackson;
    kern.jackson_k = k;
    kern.jackson_alpha = alpha;
    kern.jackson_arg_scale = 1.0 / (2.0 * k * kPi * alpha);
    kern.support_radius = std::numeric_limits<double>::infinity();
    // c_k = [ integral of sinc^2k(u / (2 k pi alpha)) du ]^-1 = [2 k pi alpha * I]^-1
    kern.normalization = 1.0 / (2.0 * k * kPi * alpha * integral);
    if (!std::isfinite(kern.normalization) || kern.normalization <= 0.0) {
        throw numeric_error("jackson normalization is not a positive finite number");
    }
    return kern;
}

MultivariateKernel product_kernel(std::vector<UnivariateKernel> factors) {
    if (factors.empty()) throw std::invalid_argument("product kernel needs at least one factor");
    MultivariateKernel k;
    k.factors = std::move(factors);
    return k;
}

UnivariateKernel parse_kernel(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.empty()) throw std::invalid_argument("empty kernel spec");

    try {
        if (parts[0] == "fejer") {
            if (parts.size() != 1) throw std::invalid_argument("fejer takes no parameters");
            return make_fejer();
        }
        if (parts[0] == "bspline") {
            if (parts.size() != 2) throw std::invalid_argument("expected bspline:<s>");
            return make_bspline(std::stoi(parts[1]));
        }
        if (parts[0] == "jackson") {
            if (parts.size() < 2 || parts.size() > 3)
                throw std::invalid_argument("expected jackson:<k>[:<alpha>]");
            const int k = std::stoi(parts[1]);
            const double alpha = parts.size() == 3 ? std::stod(parts[2]) : 1.0;
            return make_jackson(k, alpha);
        }
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed kernel spec: " + spec);
    }
    throw std::invalid_argument("unknown kernel family in spec: " + spec);
}

std::string kernel_name(const UnivariateKernel& kern) {
    switch (kern.family) {
        case KernelFamily::Fejer:
            return "fejer";
        case KernelFamily::BSpline:
            return "bspline:" + std::to_string(kern.bspline_order);
        case KernelFamily::Jackson: {
            std::string s = "jackson:" + std::to_string(kern.jackson_k);
            if (kern.jackson_alpha != 1.0) {
                std::ostringstream os;
                os << ":" << kern.jackson_alpha;
                s += os.str();
            }
            return s;
        }
    }
    return "?";
}

KernelAxiomReport check_axioms(const UnivariateKernel& kern, double beta, const GridSpec& grid) {
    if (beta <= 0.0) throw std::invalid_argument("moment order beta must be > 0");
    if (grid.u_steps < 1 || grid.k_range < 1) throw std::invalid_argument("bad axiom grid");

    long k_range = grid.k_range;
    if (kern.bounded()) {
        k_range = std::min<long>(k_range, static_cast<long>(std::ceil(kern.support_radius)) + 1);
    }

    KernelAxiomReport rep;
    rep.moment_beta = beta;
    for (int iu = 0; iu < grid.u_steps; ++iu) {
        const double u = static_cast<double>(iu) / grid.u_steps;
        double s = 0.0, sa = 0.0, sm = 0.0;
        for (long k = -k_range; k <= k_range; ++k) {
            const double t = u - k;
            const double v = kern.evaluate(t);
            s += v;
            sa += std::abs(v);
            sm += std::abs(v) * std::pow(std::abs(t), beta);
        }
        rep.partition_of_unity_max_deviation =
            std::max(rep.partition_of_unity_max_deviation, std::abs(s - 1.0));
        rep.summability_estimate = std::max(rep.summability_estimate, sa);
        rep.moment_estimate = std::max(rep.moment_estimate, sm);
    }
    std::ostringstream os;
    os << "u in [0,1) step 1/" << grid.u_steps << ", k in [-" << k_range << "," << k_range << "]";
    rep.grid_spec = os.str();
    return rep;
}

}  // namespace skimg
