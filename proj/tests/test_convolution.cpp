#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "dok/compensated.hpp"
#include "dok/convolution.hpp"
#include "dok/errors.hpp"
#include "dok/kernel.hpp"
#include "oracles.hpp"

using namespace dok;
using real50 = oracle::real50;

namespace {

LatticeEvaluator g_evaluator(const StepSize& step) {
    return {[step](std::int64_t m) { return eval_G_discrete(step, m); }, 1};
}

}  // namespace

TEST_CASE("compensated accumulator survives catastrophic intermediate growth") {
    CompensatedSum acc;
    acc.add(1.0);
    acc.add(1e100);
    acc.add(-1e100);
    CHECK(acc.value() == 1.0);
    acc.reset();
    CHECK(acc.value() == 0.0);
}

TEST_CASE("unit-mass kernel reproduces the evaluator bitwise") {
    const LatticeFunction delta = LatticeFunction::delta(0.1);
    CHECK(delta.decay().value() == 0.0);
    const LatticeEvaluator f{[](std::int64_t m) { return std::sin(0.37 * double(m)) + 2.0; }, 0};
    for (const std::int64_t b : {-7LL, 0LL, 3LL, 25LL}) {
        const ConvolutionResult r = convolve_at(delta, f, b, 1e-12);
        CHECK(r.value == f.fn(b));
        CHECK(r.plan.tail_bound == 0.0);
        CHECK(r.plan.radius_used == 0);
    }
}

TEST_CASE("operator weights against fundamental-solution samples give the unit mass") {
    const StepSize step(0.1);
    const OperatorParams p = compute_params(step);
    const LatticeFunction kernel = sample_D(p, 8);
    const LatticeEvaluator g = g_evaluator(step);

    const ConvolutionResult at0 = convolve_at(kernel, g, 0, 1e-8);
    CHECK(std::abs(at0.value - 1.0) <= 1e-8);
    CHECK(at0.plan.tail_bound + at0.plan.rounding_floor <= 1e-8);
    CHECK(at0.plan.radius_used >= 8);
    CHECK(at0.plan.radius_used <= 200);

    const WindowResult w = convolve_window(kernel, g, -20, 20, 1e-8);
    for (std::int64_t b = -20; b <= 20; ++b) {
        const double want = b == 0 ? 1.0 : 0.0;
        CHECK(std::abs(w.values.value(b) - want) <= 1e-8);
    }
    // output window carries no tail metadata of its own
    CHECK(!w.values.tail_ratio());
    CHECK_THROWS_AS((void)w.values.value_extended(21), NonDecayingKernel);
}

TEST_CASE("tightening the tolerance does not move a certified value") {
    const StepSize step(0.1);
    const OperatorParams p = compute_params(step);
    const LatticeFunction kernel = sample_D(p, 8);
    const LatticeEvaluator g = g_evaluator(step);
    const ConvolutionResult loose = convolve_at(kernel, g, 0, 1e-6);
    const ConvolutionResult tight = convolve_at(kernel, g, 0, 1e-9);
    CHECK(tight.plan.radius_used >= loose.plan.radius_used);
    CHECK(std::abs(loose.value - tight.value) <= 1e-6 + 1e-9);
}

TEST_CASE("bilinearity in the kernel and the evaluator") {
    const StepSize step(0.1);
    const OperatorParams p = compute_params(step);
    const LatticeFunction kernel = sample_D(p, 8);
    std::vector<double> scaled;
    for (std::int64_t b = -8; b <= 8; ++b) scaled.push_back(2.5 * kernel.value(b));
    const LatticeFunction kernel25(0.1, -8, scaled, Symmetry::even, p.lambda1);

    const LatticeEvaluator g = g_evaluator(step);
    const double base = convolve_at(kernel, g, 0, 1e-9).value;
    const double big = convolve_at(kernel25, g, 0, 2.5e-9).value;
    CHECK(std::abs(big - 2.5 * base) <= 1e-9);

    const LatticeEvaluator sum{
        [step](std::int64_t m) { return eval_G_discrete(step, m) + std::cos(0.1 * double(m)); },
        1};
    const LatticeEvaluator cosine{[](std::int64_t m) { return std::cos(0.1 * double(m)); }, 0};
    const double both = convolve_at(kernel, sum, 3, 1e-9).value;
    const double parts =
        convolve_at(kernel, g, 3, 1e-9).value + convolve_at(kernel, cosine, 3, 1e-9).value;
    CHECK(std::abs(both - parts) <= 1e-8);
}

TEST_CASE("shifting the evaluator shifts the output") {
    const StepSize step(0.1);
    const OperatorParams p = compute_params(step);
    const LatticeFunction kernel = sample_D(p, 8);
    const LatticeEvaluator g = g_evaluator(step);
    const LatticeEvaluator shifted{[step](std::int64_t m) { return eval_G_discrete(step, m - 5); },
                                   1};
    // same shared plan -> identical term sequences -> identical bits
    const WindowResult base = convolve_window(kernel, g, -10, 10, 1e-8);
    const WindowResult moved = convolve_window(kernel, shifted, -10, 10, 1e-8);
    for (std::int64_t b = -5; b <= 5; ++b) {
        CHECK(moved.values.value(b + 5) == base.values.value(b));
    }
}

TEST_CASE("quadratic probe is not annihilated") {
    const StepSize step(0.1);
    const OperatorParams p = compute_params(step);
    const LatticeFunction kernel = sample_D(p, 8);
    const LatticeEvaluator square{[](std::int64_t m) {
                                      const double x = 0.1 * double(m);
                                      return x * x;
                                  },
                                  2};
    const ConvolutionResult r = convolve_at(kernel, square, 0, 1e-9);
    CHECK(r.value > 0.399);
    CHECK(r.value < 0.401);
    // against a 50-digit direct sum over a wide window; the residual tail of
    // that sum is ~1e-45, so the certificate is the only error source
    real50 want = 0;
    for (std::int64_t g = -80; g <= 80; ++g)
        want += oracle::D(real50("0.1"), g) * (real50("0.1") * g) * (real50("0.1") * g);
    CHECK(oracle::rel_err(r.value, want) <= 2e-9);
}

TEST_CASE("kernels without usable decay are rejected") {
    const LatticeFunction no_meta(0.1, -2, {1.0, 2.0, 1.0});
    const LatticeFunction unit_ratio(0.1, -2, {1.0, 2.0, 1.0}, Symmetry::none, 1.0);
    const LatticeFunction growing(0.1, -2, {1.0, 2.0, 1.0}, Symmetry::none, -1.5);
    const LatticeEvaluator f{[](std::int64_t) { return 1.0; }, 0};
    CHECK_THROWS_AS(convolve_at(no_meta, f, 0, 1e-6), NonDecayingKernel);
    CHECK_THROWS_AS(convolve_at(unit_ratio, f, 0, 1e-6), NonDecayingKernel);
    CHECK_THROWS_AS(convolve_at(growing, f, 0, 1e-6), NonDecayingKernel);
    CHECK_THROWS_AS((void)no_meta.value_extended(5), NonDecayingKernel);
}

TEST_CASE("impossible tolerances are refused, not silently missed") {
    const StepSize step(0.1);
    const OperatorParams p = compute_params(step);
    const LatticeFunction kernel = sample_D(p, 8);
    const LatticeEvaluator g = g_evaluator(step);
    // the rounding floor for these magnitudes sits around 1e-11
    CHECK_THROWS_AS(convolve_at(kernel, g, 0, 1e-13), TolUnachievable);
    CHECK_THROWS_AS(convolve_at(kernel, g, 0, 1e-30), TolUnachievable);
    CHECK_NOTHROW(convolve_at(kernel, g, 0, 1e-9));
}

TEST_CASE("construction misuse is rejected upfront") {
    const StepSize step(0.1);
    const OperatorParams p = compute_params(step);
    const LatticeFunction kernel = sample_D(p, 4);
    const LatticeEvaluator g = g_evaluator(step);
    CHECK_THROWS_AS(convolve_at(kernel, {nullptr, 0}, 0, 1e-8), std::invalid_argument);
    CHECK_THROWS_AS(convolve_at(kernel, {[](std::int64_t) { return 1.0; }, 3}, 0, 1e-8),
                    std::invalid_argument);
    CHECK_THROWS_AS(convolve_at(kernel, {[](std::int64_t) { return 1.0; }, -1}, 0, 1e-8),
                    std::invalid_argument);
    CHECK_THROWS_AS(convolve_at(kernel, g, 0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(convolve_at(kernel, g, 0, -1e-8), std::invalid_argument);
    CHECK_THROWS_AS(convolve_window(kernel, g, 5, -5, 1e-8), std::invalid_argument);
    CHECK_THROWS_AS(LatticeFunction(0.1, 0, {}), std::invalid_argument);
    CHECK_THROWS_AS(LatticeFunction(0.0, 0, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(LatticeFunction(0.1, -1, {1.0, 0.0, 2.0}, Symmetry::even),
                    std::invalid_argument);
    CHECK_THROWS_AS(LatticeFunction(0.1, -1, {1.0, 0.5, -1.0}, Symmetry::odd),
                    std::invalid_argument);
    CHECK_NOTHROW(LatticeFunction(0.1, -1, {1.0, 0.0, -1.0}, Symmetry::odd));
}
