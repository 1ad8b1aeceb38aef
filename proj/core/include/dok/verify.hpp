#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dok/params.hpp"
#include "dok/step_size.hpp"

namespace dok {

/// positive: passed <=> max_residual <= tolerance.
/// control:  passed <=> max_residual >  tolerance (the check is *supposed*
/// to fail to annihilate; a tiny residual here would flag a vacuous suite).
enum class CheckKind { positive, control };

struct Offender {
    std::int64_t beta;     ///< lattice index (or draw index for sampled checks)
    double residual;
};

struct CheckReport {
    std::string name;
    double h;
    double tolerance;
    double max_residual;
    std::int64_t radius_used;
    bool passed;
    CheckKind kind;
    std::string note;               ///< failure reason, empty when clean
    std::vector<Offender> details;  ///< worst offenders, largest first
};

enum class AnnihilationTarget { sin, cos, xsin, xcos };

struct VerifyConfig {
    std::int64_t delta_window = 20;
    std::int64_t annihilation_window = 10;
    std::int64_t evenness_window = 30;
    std::int64_t spectral_window = 10;   ///< beta range for coefficient recovery
    std::int64_t series_draws = 20;      ///< random frequencies per step
    std::int64_t series_terms = 100000;
    double delta_tol = 1e-8;             ///< absolute
    double annihilation_tol_factor = 1e-7;  ///< scaled by K = 2/d per step
    double spectral_tol = 1e-9;          ///< relative, coefficient recovery
    double series_tol = 1e-6;            ///< relative, series vs closed form
    double pf_tol = 1e-10;               ///< partial fractions / reconstruction
    std::uint32_t seed = 0x5eed5u;       ///< frequency draws are reproducible
    bool include_controls = false;       ///< append the non-annihilation probe
    PrecisionMode mode = PrecisionMode::fast;
};

/// Applies the operator weights to the fundamental-solution samples and
/// compares with the unit mass at 0 over [-window, window] (window >= 5).
CheckReport check_delta(const OperatorParams& params, std::int64_t window, double tol);

/// Applies the weights to sin(h m), cos(h m), h m sin(h m) or h m cos(h m);
/// every windowed output must vanish to tol (callers scale tol by K).
CheckReport check_annihilation(const OperatorParams& params, AnnihilationTarget target,
                               std::int64_t window, double tol);

/// Exact evenness of the weights plus agreement of successive ratios with
/// lambda1 for |beta| >= 2 (window >= 4).
CheckReport check_evenness_decay(const OperatorParams& params, std::int64_t window);

/// Applies the weights to (h m)^2, which is *not* annihilated: the result is
/// ~4h everywhere, and the check passes only if the residual exceeds 2h.
CheckReport check_negative_control(const OperatorParams& params, std::int64_t window);

/// Fourier coefficients of the closed-form symbol vs the direct weights,
/// relative to 1 + |weight|, for |beta| <= window.
CheckReport check_spectral_coefficients(const OperatorParams& params, std::int64_t window,
                                        double tol);

/// Lattice-sum symbol vs closed form at `draws` seeded random frequencies
/// (pole-adjacent draws rejected).  Residual: relative error at `terms`
/// terms; additionally each draw must improve >= 4x from 64 to 128 terms.
CheckReport check_series_identity(const OperatorParams& params, std::int64_t draws,
                                  std::int64_t terms, double tol, std::uint32_t seed);

/// a = 1, b1 lambda1^2 = -a1, residue route vs closed form for a1, and
/// 100-point reconstruction vs closed symbol (grid-relative).
CheckReport check_partial_fractions(const OperatorParams& params, double tol);

/// Nine deterministic reports per step (delta, 4 annihilations, evenness and
/// decay, 3 spectral), plus one negative control when configured.  Throws
/// EmptyInput for an empty list.
std::vector<CheckReport> run_suite(const std::vector<StepSize>& steps, const VerifyConfig& config);

}  // namespace dok
