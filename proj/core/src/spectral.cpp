#include "dok/spectral.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "dok/compensated.hpp"
#include "dok/errors.hpp"

namespace dok {

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

// q(lambda) / (lambda Q2(lambda)) scaled by 2/d, with the palindromic
// quartic q = {1, -4 cos h, 2 cos 2h + 4, -4 cos h, 1} in Horner form.
std::complex<double> symbol_at(const OperatorParams& p, std::complex<double> lambda) {
    const double ch = std::cos(p.h);
    const double mid = 2.0 * std::cos(2.0 * p.h) + 4.0;
    const std::complex<double> q =
        (((lambda - 4.0 * ch) * lambda + mid) * lambda - 4.0 * ch) * lambda + 1.0;
    const std::complex<double> q2 = (lambda + p.c) * lambda + 1.0;
    return (2.0 / p.d) * q / (lambda * q2);
}

}  // namespace

SymbolValue symbol_closed(const OperatorParams& params, double p) {
    const std::complex<double> lambda = std::polar(1.0, kTwoPi * p * params.h);
    return {p, lambda, symbol_at(params, lambda)};
}

std::complex<double> symbol_series(const StepSize& h, double p, std::int64_t terms) {
    if (terms < 1) throw std::invalid_argument("lattice sum needs at least one term");
    const double hh = h.h();
    const double z1 = hh * p + hh / kTwoPi;
    const double z2 = hh * p - hh / kTwoPi;
    for (const double z : {z1, z2}) {
        const double dist = std::abs(z - std::nearbyint(z));
        if (dist < 1e-8)
            throw PoleProximity("shifted frequency " + fmt(z) + " within " + fmt(dist) +
                                " of a lattice pole");
    }
    // All summands are positive; accumulate smallest (outermost) first.
    const auto f = [z1, z2](double b) {
        const double u = (b - z1) * (b - z2);
        return 1.0 / (u * u);
    };
    CompensatedSum acc;
    for (std::int64_t n = terms; n >= 1; --n) {
        acc.add(f(double(n)));
        acc.add(f(double(-n)));
    }
    acc.add(f(0.0));
    const double two_pi_4 = kTwoPi * kTwoPi * kTwoPi * kTwoPi;
    return {two_pi_4 / (hh * hh * hh * acc.value()), 0.0};
}

double fourier_coefficient(const OperatorParams& params, std::int64_t beta, std::int64_t nodes) {
    if (nodes < 64) throw std::invalid_argument("quadrature needs at least 64 nodes");
    CompensatedSum re;
    CompensatedSum im;
    for (std::int64_t j = 0; j < nodes; ++j) {
        const std::complex<double> lambda = std::polar(1.0, kTwoPi * double(j) / double(nodes));
        // twiddle e^{-2 pi i j beta / nodes}, with j beta reduced mod nodes
        // exactly so the phase stays clean at large beta
        std::int64_t r = (j * beta) % nodes;
        if (r < 0) r += nodes;
        const std::complex<double> w = std::polar(1.0, -kTwoPi * double(r) / double(nodes));
        const std::complex<double> term = symbol_at(params, lambda) * w;
        re.add(term.real());
        im.add(term.imag());
    }
    const double re_mean = re.value() / double(nodes);
    const double im_mean = im.value() / double(nodes);
    if (std::abs(im_mean) > 1e-9 * (1.0 + std::abs(re_mean)))
        throw Error("quadrature imaginary part failed to cancel: " + fmt(im_mean));
    return re_mean;
}

double fourier_coefficient(const OperatorParams& params, std::int64_t beta) {
    std::int64_t nodes = 1 << 14;
    double prev = fourier_coefficient(params, beta, nodes);
    for (int i = 0; i < 7; ++i) {
        nodes *= 2;
        const double next = fourier_coefficient(params, beta, nodes);
        if (std::abs(next - prev) <= 1e-10 * (1.0 + std::abs(next))) return next;
        prev = next;
    }
    throw Error("coefficient quadrature did not stabilize by " + std::to_string(nodes) +
                " nodes");
}

PartialFractions partial_fractions(const OperatorParams& params) {
    const double ch = std::cos(params.h);
    const double mid = 2.0 * std::cos(2.0 * params.h) + 4.0;
    const auto quartic = [ch, mid](double l) {
        return (((l - 4.0 * ch) * l + mid) * l - 4.0 * ch) * l + 1.0;
    };
    // simple pole at lambda = 0: q(0)/Q2(0) = 1/1
    const double a = quartic(0.0);
    const double l1 = params.lambda1;
    // residue at lambda1: q(l1)/(l1 Q2'(l1)) = q(l1)/(l1^2 - 1) on the root
    const double a1 = quartic(l1) / (l1 * l1 - 1.0);
    if (std::abs(a1 - params.a1) > 1e-10 * std::abs(params.a1))
        throw InconsistentA1("residue route a1 = " + fmt(a1) + " disagrees with closed form " +
                             fmt(params.a1));
    const double b1 = -a1 / (l1 * l1);
    const double linear = -sin_x_minus_x_cos_x(2.0 * params.h) / params.d;
    return {a, a1, b1, l1, params.lambda2, linear};
}

std::complex<double> reconstruct_symbol(const PartialFractions& pf, const OperatorParams& params,
                                        double p) {
    const std::complex<double> l = std::polar(1.0, kTwoPi * p * params.h);
    const std::complex<double> sum =
        l + pf.linear_term + pf.a / l + pf.a1 / (l - pf.lambda1) + pf.b1 / (l - pf.lambda2);
    return (2.0 / params.d) * sum;
}

}  // namespace dok
