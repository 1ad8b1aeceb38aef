#pragma once

namespace dok::fd {

/// Residual of f'''' + 2 f'' + f at x, using the 5-point fourth-difference
/// and 3-point second-difference central stencils (truncation O(s^2)).
/// Real is any float-like type; pass an extended-precision type when s^-4
/// amplification would swamp binary64 (16 eps / s^4 ~ 3.6e-3 at s = 1e-3).
template <class Real, class F>
[[nodiscard]] Real operator_residual(F&& f, Real x, Real s) {
    const Real fm2 = f(x - 2 * s);
    const Real fm1 = f(x - s);
    const Real f0 = f(x);
    const Real fp1 = f(x + s);
    const Real fp2 = f(x + 2 * s);
    const Real s2 = s * s;
    const Real d4 = (fm2 - 4 * fm1 + 6 * f0 - 4 * fp1 + fp2) / (s2 * s2);
    const Real d2 = (fm1 - 2 * f0 + fp1) / s2;
    return d4 + 2 * d2 + f0;
}

}  // namespace dok::fd
