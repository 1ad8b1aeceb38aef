#pragma once

#include <cstdint>

#include "dok/lattice.hpp"
#include "dok/params.hpp"

namespace dok {

/// Fundamental solution of f'''' + 2 f'' + f = delta:
///   G(x) = sign(x) (sin x - x cos x) / 4.
/// Even, G(0) = 0, and C^2 across the origin (the third derivative jumps).
double eval_G_continuous(double x);

/// G restricted to the lattice: eval_G_continuous(h * beta), same code path.
double eval_G_discrete(const StepSize& h, std::int64_t beta);

/// Discrete operator weight at lattice offset beta:
///   K * a1 * lambda1^(|beta|-1)           |beta| >= 2
///   K * (1 + a1)                          |beta| = 1
///   K * ((2h cos 2h - sin 2h)/d + a1/lambda1)   beta = 0
/// Even in beta by construction; |beta| >= 2 decays geometrically with
/// signed ratio lambda1.
double eval_D(const OperatorParams& params, std::int64_t beta);

/// Tabulates eval_D over [-radius, radius] with even symmetry and
/// tail_ratio = lambda1.  radius must be >= 2 (RadiusTooSmall), so the
/// stored edge sits inside the pure geometric regime, and <= 1e6.
LatticeFunction sample_D(const OperatorParams& params, std::int64_t radius);

/// Finite-difference residual of G under f'''' + 2 f'' + f at x, stencil
/// step s.  Evaluated in extended precision internally so the O(s^2)
/// truncation term is what comes back, not binary64 rounding amplified by
/// s^-4.  Requires s > 0 and |x| > 10 s (TooCloseToOrigin: the stencil must
/// not straddle the kink at 0).
double ode_residual(double x, double step);

}  // namespace dok
