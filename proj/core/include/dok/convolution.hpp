#pragma once

#include <cstdint>
#include <functional>

#include "dok/lattice.hpp"

namespace dok {

/// Pointwise lattice evaluator with a declared growth envelope
///   |fn(m)| <= (1 + h |m|)^growth_degree,   growth_degree in {0, 1, 2}.
/// The envelope is a caller contract; truncation certificates are computed
/// against it, not against sampled values.
struct LatticeEvaluator {
    std::function<double(std::int64_t)> fn;
    int growth_degree = 0;
};

/// Truncation certificate for one convolution window.
///   tail_bound:      sum_{|gamma| > radius_used} |kernel| * envelope, via the
///                    closed-form geometric-polynomial tail sums
///   rounding_floor:  2 eps * sum_{|gamma| <= radius_used} |kernel| * envelope,
///                    the compensated-summation noise bound
/// The plan guarantees tail_bound + rounding_floor <= target_tolerance.
struct ConvolutionPlan {
    double target_tolerance;
    std::int64_t radius_used;
    double tail_bound;
    double rounding_floor;
};

struct ConvolutionResult {
    double value;
    ConvolutionPlan plan;
};

struct WindowResult {
    LatticeFunction values;
    ConvolutionPlan plan;
};

/// (kernel * f)(beta) = sum_gamma kernel(gamma) f(beta - gamma), truncated at
/// a radius certified for |result - exact| <= tol.  Throws NonDecayingKernel
/// without usable decay metadata, TolUnachievable when no radius <= kRadiusCap
/// satisfies the certificate (e.g. tol below the rounding floor).
/// Terms are accumulated largest |gamma| first (smallest magnitudes first)
/// into a compensated sum.
ConvolutionResult convolve_at(const LatticeFunction& kernel, const LatticeEvaluator& f,
                              std::int64_t beta, double tol);

/// Same certificate shared across an output window [lo, hi].
WindowResult convolve_window(const LatticeFunction& kernel, const LatticeEvaluator& f,
                             std::int64_t lo, std::int64_t hi, double tol);

}  // namespace dok
