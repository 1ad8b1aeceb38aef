#include "dok/params.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "dok/errors.hpp"

namespace dok {

namespace {

// Terms are dropped once they stop moving the partial sum at two digits
// below machine epsilon.
constexpr double kTermStop = 1e-2 * std::numeric_limits<double>::epsilon();

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

}  // namespace

namespace detail {

// sin x - x cos x = sum_{k>=1} (-1)^{k+1} 2k x^{2k+1}/(2k+1)!
//                 = x^3/3 - x^5/30 + x^7/840 - ...
double sin_x_minus_x_cos_x_series(double x) {
    const double x2 = x * x;
    double term = x * x2 / 3.0;
    double sum = term;
    for (int k = 1;; ++k) {
        term *= -x2 * double(k + 1) / (double(k) * double(2 * k + 2) * double(2 * k + 3));
        sum += term;
        if (std::abs(term) <= kTermStop * std::abs(sum)) break;
    }
    return sum;
}

// x^2 - sin^2 x = sum_{k>=2} (-1)^k 2^{2k-1} x^{2k}/(2k)!
//              = x^4/3 - 2x^6/45 + x^8/315 - ...
double x_sq_minus_sin_sq_x_series(double x) {
    const double x2 = x * x;
    double term = x2 * x2 / 3.0;
    double sum = term;
    for (int k = 2;; ++k) {
        term *= -4.0 * x2 / (double(2 * k + 1) * double(2 * k + 2));
        sum += term;
        if (std::abs(term) <= kTermStop * std::abs(sum)) break;
    }
    return sum;
}

// x - sin x = x^3/6 - x^5/120 + x^7/5040 - ...
double x_minus_sin_x_series(double x) {
    const double x2 = x * x;
    double term = x * x2 / 6.0;
    double sum = term;
    for (int k = 1;; ++k) {
        term *= -x2 / (double(2 * k + 2) * double(2 * k + 3));
        sum += term;
        if (std::abs(term) <= kTermStop * std::abs(sum)) break;
    }
    return sum;
}

}  // namespace detail

double sin_x_minus_x_cos_x(double x) {
    if (std::abs(x) < kSeriesThreshold) return detail::sin_x_minus_x_cos_x_series(x);
    return std::sin(x) - x * std::cos(x);
}

double x_sq_minus_sin_sq_x(double x) {
    if (std::abs(x) < kSeriesThreshold) return detail::x_sq_minus_sin_sq_x_series(x);
    const double s = std::sin(x);
    return x * x - s * s;
}

double x_minus_sin_x(double x) {
    if (std::abs(x) < kSeriesThreshold) return detail::x_minus_sin_x_series(x);
    return x - std::sin(x);
}

BranchedValue stable_d(const StepSize& h) {
    const double x = h.h();
    if (x < kSeriesThreshold) return {detail::sin_x_minus_x_cos_x_series(x), EvalBranch::series};
    return {std::sin(x) - x * std::cos(x), EvalBranch::direct};
}

BranchedValue stable_s(const StepSize& h) {
    const double x = h.h();
    if (x < kSeriesThreshold) return {detail::x_sq_minus_sin_sq_x_series(x), EvalBranch::series};
    const double s = std::sin(x);
    return {x * x - s * s, EvalBranch::direct};
}

namespace {

// Strict mode: inside the overlap window both branches must agree to ten
// digits, otherwise one of them has silently degraded.
void verify_branches(double x) {
    if (!(x >= 0.5 * kSeriesThreshold && x <= 2.0 * kSeriesThreshold)) return;
    const double sx = std::sin(x);
    const struct {
        const char* name;
        double direct;
        double series;
    } pairs[] = {
        {"sin x - x cos x", sx - x * std::cos(x), detail::sin_x_minus_x_cos_x_series(x)},
        {"x^2 - sin^2 x", x * x - sx * sx, detail::x_sq_minus_sin_sq_x_series(x)},
        {"x - sin x", x - sx, detail::x_minus_sin_x_series(x)},
    };
    for (const auto& p : pairs) {
        const double scale = std::max(std::abs(p.direct), std::abs(p.series));
        if (std::abs(p.direct - p.series) > 1e-10 * scale)
            throw BranchMismatch(std::string(p.name) + " branches disagree at x = " + fmt(x) +
                                 ": direct " + fmt(p.direct) + " vs series " + fmt(p.series));
    }
}

}  // namespace

OperatorParams compute_params(const StepSize& step, PrecisionMode mode) {
    const double h = step.h();
    if (mode == PrecisionMode::strict) {
        verify_branches(h);
        verify_branches(2.0 * h);
    }

    const BranchedValue bd = stable_d(step);
    const BranchedValue bs = stable_s(step);
    const double d = bd.value;
    const double c = x_minus_sin_x(2.0 * h) / d;

    const double disc = c * c - 4.0;
    if (disc <= 0.0)
        throw DegenerateRoots("characteristic discriminant c^2 - 4 = " + fmt(disc) +
                              " at h = " + fmt(h));

    // Subtraction-free root pair: the larger-magnitude root of the
    // palindromic quadratic directly, the smaller one via the unit product.
    const double big = -0.5 * (c + std::sqrt(disc));
    const double small = 1.0 / big;
    const double lambda1 = std::abs(small) <= std::abs(big) ? small : big;
    const double lambda2 = 1.0 / lambda1;
    if (std::abs(lambda1) >= 1.0 - 1e-12)
        throw DegenerateRoots("|lambda1| = " + fmt(std::abs(lambda1)) +
                              " too close to the unit circle at h = " + fmt(h));

    const double sh = std::sin(h);
    const double sh2 = sh * sh;
    const double l2 = lambda1 * lambda1;
    const double a1 = 4.0 * h * h * sh2 * sh2 * l2 / ((l2 - 1.0) * d * d);

    OperatorParams p;
    p.h = h;
    p.d = d;
    p.s = bs.value;
    p.lambda1 = lambda1;
    p.lambda2 = lambda2;
    p.a1 = a1;
    p.b1 = -a1 / l2;
    p.k = 2.0 / d;
    p.c = c;
    p.branch = bd.branch;
    return p;
}

}  // namespace dok
