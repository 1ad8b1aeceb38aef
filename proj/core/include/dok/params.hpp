#pragma once

#include "dok/step_size.hpp"

namespace dok {

/// Which evaluation path produced a value: closed-form trig expression, or
/// the alternating Taylor branch used once cancellation would eat digits.
enum class EvalBranch { direct, series };

/// fast: single branch per argument.  strict: inside the overlap window both
/// branches are evaluated and must agree to 1e-10 relative (BranchMismatch
/// otherwise).  Selected via the DOK_PRECISION_MODE environment variable in
/// the command-line driver.
enum class PrecisionMode { fast, strict };

/// Arguments below this threshold take the series branch.  The direct forms
/// lose ~x^-2 relative digits (leading terms x^3/3 and x^4/3 against
/// magnitudes x and x^2), so at the threshold the direct error is ~3e-13
/// relative while the truncated series is correct to an ulp; the overlap
/// window [0.025, 0.1] is where both branches hold >= 10 clean digits.
inline constexpr double kSeriesThreshold = 0.05;

struct BranchedValue {
    double value;
    EvalBranch branch;
};

/// sin h - h cos h, cancellation-safe.  Positive for h in (0, pi).
BranchedValue stable_d(const StepSize& h);

/// h^2 - sin^2 h, cancellation-safe.  Positive for h > 0.
BranchedValue stable_s(const StepSize& h);

/// Scalar cores on the full real line (all three are odd/even as expected
/// and take the series branch for |x| < kSeriesThreshold).
double sin_x_minus_x_cos_x(double x);
double x_sq_minus_sin_sq_x(double x);
double x_minus_sin_x(double x);

namespace detail {
// Series branches exposed for the overlap-agreement tests.
double sin_x_minus_x_cos_x_series(double x);
double x_sq_minus_sin_sq_x_series(double x);
double x_minus_sin_x_series(double x);
}  // namespace detail

/// Everything downstream of the step: the characteristic-root pair, the
/// kernel coefficients, and the common scale K = 2/d.
///
/// Invariants (enforced by construction, checked by the test-suite):
///   lambda1 * lambda2 = 1,  -1 < lambda1 < 0,  Q2(lambda1) ~= 0
///   a1 < 0,  b1 = -a1 / lambda1^2,  k = 2/d > 0,  c > 2
struct OperatorParams {
    double h;
    double d;        ///< sin h - h cos h
    double s;        ///< h^2 - sin^2 h
    double lambda1;  ///< root of lambda^2 + c lambda + 1 with |lambda| < 1
    double lambda2;  ///< 1 / lambda1
    double a1;       ///< 4 h^2 sin^4 h lambda1^2 / ((lambda1^2 - 1) d^2)
    double b1;       ///< -a1 / lambda1^2
    double k;        ///< 2 / d
    double c;        ///< (2h - sin 2h) / d
    EvalBranch branch;  ///< branch used for d (s and the 2h core follow suit)
};

/// Builds the parameter pack for a validated step.  The smaller root comes
/// from the rationalized quadratic formula (never the subtractive one), the
/// larger via the unit product.  Throws DegenerateRoots when the separation
/// |lambda1| >= 1 - 1e-12 is lost, BranchMismatch in strict mode if the two
/// evaluation branches disagree inside the overlap window.
OperatorParams compute_params(const StepSize& h, PrecisionMode mode = PrecisionMode::fast);

}  // namespace dok
