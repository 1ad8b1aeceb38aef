#include "dok/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "dok/convolution.hpp"
#include "dok/errors.hpp"
#include "dok/kernel.hpp"
#include "dok/spectral.hpp"

namespace dok {

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;
constexpr std::int64_t kKernelSampleRadius = 8;

void sort_and_trim(std::vector<Offender>& off, std::size_t keep = 5) {
    std::sort(off.begin(), off.end(), [](const Offender& a, const Offender& b) {
        if (a.residual != b.residual) return a.residual > b.residual;
        return a.beta < b.beta;
    });
    if (off.size() > keep) off.resize(keep);
}

CheckReport failed_report(const char* name, double h, double tol, CheckKind kind,
                          const std::string& why) {
    return {name, h, tol, std::numeric_limits<double>::infinity(), 0, false, kind, why, {}};
}

const char* target_name(AnnihilationTarget t) {
    switch (t) {
        case AnnihilationTarget::sin: return "annihilation_sin";
        case AnnihilationTarget::cos: return "annihilation_cos";
        case AnnihilationTarget::xsin: return "annihilation_xsin";
        default: return "annihilation_xcos";
    }
}

LatticeEvaluator target_evaluator(AnnihilationTarget t, double h) {
    switch (t) {
        case AnnihilationTarget::sin:
            return {[h](std::int64_t m) { return std::sin(h * double(m)); }, 0};
        case AnnihilationTarget::cos:
            return {[h](std::int64_t m) { return std::cos(h * double(m)); }, 0};
        case AnnihilationTarget::xsin:
            return {[h](std::int64_t m) {
                        const double x = h * double(m);
                        return x * std::sin(x);
                    },
                    1};
        default:
            return {[h](std::int64_t m) {
                        const double x = h * double(m);
                        return x * std::cos(x);
                    },
                    1};
    }
}

// Windowed residual of (D * f) against expect(beta).
template <class Expect>
CheckReport windowed_check(const char* name, const OperatorParams& params,
                           const LatticeEvaluator& f, Expect&& expect, std::int64_t window,
                           double tol, double plan_tol) {
    try {
        const LatticeFunction kernel = sample_D(params, kKernelSampleRadius);
        const WindowResult wr = convolve_window(kernel, f, -window, window, plan_tol);
        CheckReport rep{name, params.h, tol, 0.0, wr.plan.radius_used,
                        true, CheckKind::positive, "", {}};
        std::vector<Offender> off;
        for (std::int64_t b = -window; b <= window; ++b) {
            const double r = std::abs(wr.values.value(b) - expect(b));
            off.push_back({b, r});
            rep.max_residual = std::max(rep.max_residual, r);
        }
        sort_and_trim(off);
        rep.details = std::move(off);
        rep.passed = rep.max_residual <= tol;
        if (!rep.passed) rep.note = "max residual exceeds tolerance";
        return rep;
    } catch (const Error& e) {
        return failed_report(name, params.h, tol, CheckKind::positive, e.what());
    }
}

}  // namespace

CheckReport check_delta(const OperatorParams& params, std::int64_t window, double tol) {
    if (window < 5) throw std::invalid_argument("delta window must be >= 5");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    const StepSize step(params.h);
    const LatticeEvaluator g{[step](std::int64_t m) { return eval_G_discrete(step, m); }, 1};
    return windowed_check("delta", params, g,
                          [](std::int64_t b) { return b == 0 ? 1.0 : 0.0; }, window, tol, tol);
}

CheckReport check_annihilation(const OperatorParams& params, AnnihilationTarget target,
                               std::int64_t window, double tol) {
    if (window < 1) throw std::invalid_argument("annihilation window must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    return windowed_check(target_name(target), params, target_evaluator(target, params.h),
                          [](std::int64_t) { return 0.0; }, window, tol, tol);
}

CheckReport check_evenness_decay(const OperatorParams& params, std::int64_t window) {
    if (window < 4) throw std::invalid_argument("evenness window must be >= 4");
    const double tol = 1e-12;
    CheckReport rep{"evenness_decay", params.h, tol, 0.0, window,
                    true, CheckKind::positive, "", {}};
    std::vector<Offender> off;
    for (std::int64_t b = 1; b <= window; ++b) {
        const double r = std::abs(eval_D(params, b) - eval_D(params, -b));
        off.push_back({b, r});
        rep.max_residual = std::max(rep.max_residual, r);
    }
    // successive ratios sit on lambda1 in the geometric regime
    for (std::int64_t b = 2; b < window; ++b) {
        const double r = std::abs(eval_D(params, b + 1) / eval_D(params, b) - params.lambda1) /
                         std::abs(params.lambda1);
        off.push_back({b, r});
        rep.max_residual = std::max(rep.max_residual, r);
    }
    sort_and_trim(off);
    rep.details = std::move(off);
    rep.passed = rep.max_residual <= tol;
    if (!rep.passed) rep.note = "evenness or ratio drift above tolerance";
    return rep;
}

CheckReport check_negative_control(const OperatorParams& params, std::int64_t window) {
    if (window < 1) throw std::invalid_argument("control window must be >= 1");
    const double h = params.h;
    // (h m)^2 is outside the kernel of the operator; the response is ~4h + h^3 m^2,
    // so anything below 2h would flag a vacuous annihilation suite.
    const double threshold = 2.0 * h;
    const LatticeEvaluator f{[h](std::int64_t m) {
                                 const double x = h * double(m);
                                 return x * x;
                             },
                             2};
    try {
        const LatticeFunction kernel = sample_D(params, kKernelSampleRadius);
        const WindowResult wr = convolve_window(kernel, f, -window, window, 1e-9 * params.k);
        CheckReport rep{"control_quadratic", params.h, threshold, 0.0, wr.plan.radius_used,
                        true, CheckKind::control, "", {}};
        std::vector<Offender> off;
        for (std::int64_t b = -window; b <= window; ++b) {
            const double r = std::abs(wr.values.value(b));
            off.push_back({b, r});
            rep.max_residual = std::max(rep.max_residual, r);
        }
        sort_and_trim(off);
        rep.details = std::move(off);
        rep.passed = rep.max_residual > threshold;
        if (!rep.passed) rep.note = "quadratic probe unexpectedly annihilated";
        return rep;
    } catch (const Error& e) {
        return failed_report("control_quadratic", params.h, threshold, CheckKind::control,
                             e.what());
    }
}

CheckReport check_spectral_coefficients(const OperatorParams& params, std::int64_t window,
                                        double tol) {
    if (window < 1) throw std::invalid_argument("coefficient window must be >= 1");
    try {
        CheckReport rep{"spectral_coefficients", params.h, tol, 0.0, window,
                        true, CheckKind::positive, "", {}};
        std::vector<Offender> off;
        for (std::int64_t b = -window; b <= window; ++b) {
            const double direct = eval_D(params, b);
            const double recovered = fourier_coefficient(params, b);
            const double r = std::abs(recovered - direct) / (1.0 + std::abs(direct));
            off.push_back({b, r});
            rep.max_residual = std::max(rep.max_residual, r);
        }
        sort_and_trim(off);
        rep.details = std::move(off);
        rep.passed = rep.max_residual <= tol;
        if (!rep.passed) rep.note = "coefficient recovery drift above tolerance";
        return rep;
    } catch (const Error& e) {
        return failed_report("spectral_coefficients", params.h, tol, CheckKind::positive,
                             e.what());
    }
}

CheckReport check_series_identity(const OperatorParams& params, std::int64_t draws,
                                  std::int64_t terms, double tol, std::uint32_t seed) {
    if (draws < 1) throw std::invalid_argument("need at least one frequency draw");
    if (terms < 128) throw std::invalid_argument("need at least 128 terms");
    const StepSize step(params.h);
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    CheckReport rep{"spectral_series", params.h, tol, 0.0, terms,
                    true, CheckKind::positive, "", {}};
    std::vector<Offender> off;
    bool doubling_ok = true;
    try {
        for (std::int64_t i = 0; i < draws; ++i) {
            double p;
            for (;;) {
                p = unif(rng) / params.h;  // one period
                const double z1 = params.h * p + params.h / kTwoPi;
                const double z2 = params.h * p - params.h / kTwoPi;
                const double d1 = std::abs(z1 - std::nearbyint(z1));
                const double d2 = std::abs(z2 - std::nearbyint(z2));
                // Near a lattice pole the inner sum blows up and the *relative*
                // truncation drops to the closed form's cancellation noise, so
                // the 4x doubling below would see floor, not decay.  A 0.05
                // band keeps the 64-term truncation >= two orders above it.
                if (std::min(d1, d2) >= 0.05) break;
            }
            const double closed = symbol_closed(params, p).value.real();
            const auto rel = [closed](double v) { return std::abs(v - closed) / std::abs(closed); };
            const double e64 = rel(symbol_series(step, p, 64).real());
            const double e128 = rel(symbol_series(step, p, 128).real());
            const double efull = rel(symbol_series(step, p, terms).real());
            off.push_back({i, efull});
            rep.max_residual = std::max(rep.max_residual, efull);
            // cubic truncation decay: doubling the window must cut the error 4x
            if (!(e128 <= 0.25 * e64)) doubling_ok = false;
        }
    } catch (const Error& e) {
        return failed_report("spectral_series", params.h, tol, CheckKind::positive, e.what());
    }
    sort_and_trim(off);
    rep.details = std::move(off);
    rep.passed = rep.max_residual <= tol && doubling_ok;
    if (!doubling_ok)
        rep.note = "doubling 64 -> 128 terms failed to improve 4x";
    else if (!rep.passed)
        rep.note = "lattice sum drift above tolerance";
    return rep;
}

CheckReport check_partial_fractions(const OperatorParams& params, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    try {
        const PartialFractions pf = partial_fractions(params);
        CheckReport rep{"spectral_partial_fractions", params.h, tol, 0.0, 100,
                        true, CheckKind::positive, "", {}};
        // details indices: 1 constant term, 2 b1 relation, 3 a1 routes,
        // 100 + j worst reconstruction grid point
        const double r_a = std::abs(pf.a - 1.0);
        const double r_b1 = std::abs(pf.b1 * pf.lambda1 * pf.lambda1 + pf.a1) / std::abs(pf.a1);
        const double r_a1 = std::abs(pf.a1 - params.a1) / std::abs(params.a1);
        double worst_abs = 0.0;
        double scale = 0.0;
        std::int64_t worst_j = 0;
        for (int j = 0; j < 100; ++j) {
            const double p = double(j) / (100.0 * params.h);
            const std::complex<double> closed = symbol_closed(params, p).value;
            const std::complex<double> rec = reconstruct_symbol(pf, params, p);
            const double diff = std::abs(rec - closed);
            if (diff > worst_abs) {
                worst_abs = diff;
                worst_j = j;
            }
            scale = std::max(scale, std::abs(closed));
        }
        const double r_grid = worst_abs / scale;
        std::vector<Offender> off{{1, r_a}, {2, r_b1}, {3, r_a1}, {100 + worst_j, r_grid}};
        rep.max_residual = std::max({r_a, r_b1, r_a1, r_grid});
        sort_and_trim(off);
        rep.details = std::move(off);
        rep.passed = rep.max_residual <= tol;
        if (!rep.passed) rep.note = "partial-fraction identity drift above tolerance";
        return rep;
    } catch (const Error& e) {
        return failed_report("spectral_partial_fractions", params.h, tol, CheckKind::positive,
                             e.what());
    }
}

std::vector<CheckReport> run_suite(const std::vector<StepSize>& steps,
                                   const VerifyConfig& config) {
    if (steps.empty()) throw EmptyInput("verification suite needs at least one step");
    std::vector<CheckReport> out;
    for (const StepSize& s : steps) {
        const OperatorParams params = compute_params(s, config.mode);
        const double ann_tol = config.annihilation_tol_factor * params.k;
        out.push_back(check_delta(params, config.delta_window, config.delta_tol));
        for (const AnnihilationTarget t :
             {AnnihilationTarget::sin, AnnihilationTarget::cos, AnnihilationTarget::xsin,
              AnnihilationTarget::xcos})
            out.push_back(check_annihilation(params, t, config.annihilation_window, ann_tol));
        out.push_back(check_evenness_decay(params, config.evenness_window));
        out.push_back(
            check_spectral_coefficients(params, config.spectral_window, config.spectral_tol));
        out.push_back(check_series_identity(params, config.series_draws, config.series_terms,
                                            config.series_tol, config.seed));
        out.push_back(check_partial_fractions(params, config.pf_tol));
        if (config.include_controls)
            out.push_back(check_negative_control(params, config.annihilation_window));
    }
    return out;
}

}  // namespace dok
