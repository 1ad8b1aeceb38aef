#include "dok/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "dok/compensated.hpp"
#include "dok/errors.hpp"

namespace dok {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

// sum_{j>=1} q^j, j q^j, j^2 q^j for 0 <= q < 1
double geom0(double q) { return q / (1.0 - q); }
double geom1(double q) {
    const double u = 1.0 - q;
    return q / (u * u);
}
double geom2(double q) {
    const double u = 1.0 - q;
    return q * (1.0 + q) / (u * u * u);
}

// sum_{j>=1} q^j (x + j h)^g expanded in the closed geometric sums
double tail_sum(double q, double x, double h, int g) {
    switch (g) {
        case 0: return geom0(q);
        case 1: return x * geom0(q) + h * geom1(q);
        default: return x * x * geom0(q) + 2.0 * x * h * geom1(q) + h * h * geom2(q);
    }
}

// (1 + h(B + |gamma|))^g
double envelope(double h, double B, std::int64_t gamma, int g) {
    if (g == 0) return 1.0;
    const double u = 1.0 + h * (B + double(gamma < 0 ? -gamma : gamma));
    return g == 1 ? u : u * u;
}

// Certifies a truncation radius R with
//   tail(R) + rounding_floor(R) <= tol
// where tail(R) bounds the dropped terms via the kernel's geometric tail
// against the growth envelope, and rounding_floor(R) = 2 eps * sum of kept
// |kernel| * envelope is the compensated-summation noise bound.
ConvolutionPlan make_plan(const LatticeFunction& kernel, int g, std::int64_t max_abs_beta,
                          double tol) {
    if (!std::isfinite(tol) || !(tol > 0.0))
        throw std::invalid_argument("tolerance must be positive and finite");
    if (g < 0 || g > 2) throw std::invalid_argument("growth degree must be 0, 1 or 2");
    const auto decay = kernel.decay();
    if (!decay) throw NonDecayingKernel("kernel carries no tail metadata");
    const double q = *decay;
    if (q >= 1.0) throw NonDecayingKernel("kernel tail ratio " + fmt(q) + " >= 1");

    const double h = kernel.h();
    const double B = double(max_abs_beta);
    const double edge_hi = std::abs(kernel.value(kernel.hi()));
    const double edge_lo = std::abs(kernel.value(kernel.lo()));
    const std::int64_t r0 = std::max(kernel.hi(), -kernel.lo());

    CompensatedSum env;
    for (std::int64_t gamma = -r0; gamma <= r0; ++gamma)
        env.add(std::abs(kernel.value_extended(gamma)) * envelope(h, B, gamma, g));

    for (std::int64_t R = r0;; ++R) {
        double tail = 0.0;
        if (q > 0.0)
            tail = (edge_hi * std::pow(q, double(R - kernel.hi())) +
                    edge_lo * std::pow(q, double(R + kernel.lo()))) *
                   tail_sum(q, 1.0 + h * (B + double(R)), h, g);
        const double floor = 2.0 * kEps * env.value();
        if (tail + floor <= tol) return ConvolutionPlan{tol, R, tail, floor};
        if (q == 0.0 || R >= kRadiusCap) break;
        env.add(std::abs(kernel.value_extended(R + 1)) * envelope(h, B, R + 1, g));
        env.add(std::abs(kernel.value_extended(-R - 1)) * envelope(h, B, -R - 1, g));
    }
    throw TolUnachievable("no radius <= " + std::to_string(kRadiusCap) +
                          " certifies tolerance " + fmt(tol) +
                          " (geometric tail + rounding floor stay above it)");
}

// Largest |gamma| first, so the smallest contributions are absorbed before
// the dominant central terms arrive.
double accumulate(const LatticeFunction& kernel, const LatticeEvaluator& f, std::int64_t beta,
                  std::int64_t radius) {
    CompensatedSum acc;
    for (std::int64_t gamma = radius; gamma >= 1; --gamma) {
        acc.add(kernel.value_extended(gamma) * f.fn(beta - gamma));
        acc.add(kernel.value_extended(-gamma) * f.fn(beta + gamma));
    }
    acc.add(kernel.value_extended(0) * f.fn(beta));
    return acc.value();
}

}  // namespace

ConvolutionResult convolve_at(const LatticeFunction& kernel, const LatticeEvaluator& f,
                              std::int64_t beta, double tol) {
    if (!f.fn) throw std::invalid_argument("evaluator callable is empty");
    const std::int64_t b = beta < 0 ? -beta : beta;
    const ConvolutionPlan plan = make_plan(kernel, f.growth_degree, b, tol);
    return {accumulate(kernel, f, beta, plan.radius_used), plan};
}

WindowResult convolve_window(const LatticeFunction& kernel, const LatticeEvaluator& f,
                             std::int64_t lo, std::int64_t hi, double tol) {
    if (!f.fn) throw std::invalid_argument("evaluator callable is empty");
    if (lo > hi) throw std::invalid_argument("output window lo > hi");
    const std::int64_t B = std::max(lo < 0 ? -lo : lo, hi < 0 ? -hi : hi);
    const ConvolutionPlan plan = make_plan(kernel, f.growth_degree, B, tol);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t b = lo; b <= hi; ++b)
        out.push_back(accumulate(kernel, f, b, plan.radius_used));
    return {LatticeFunction(kernel.h(), lo, std::move(out)), plan};
}

}  // namespace dok
