#pragma once

#include <complex>
#include <cstdint>

#include "dok/params.hpp"

namespace dok {

/// Closed-form value of the operator symbol at frequency p.
/// lambda = e^{2 pi i p h};  value = (2/d) q(lambda) / (lambda Q2(lambda))
/// with q the palindromic quartic {1, -4 cos h, 2 cos 2h + 4, -4 cos h, 1}.
/// On the unit circle the value is real and even in p, with double zeros
/// where cos(2 pi p h) = cos h (the two annihilated frequencies).
struct SymbolValue {
    double p;
    std::complex<double> lambda;
    std::complex<double> value;
};

SymbolValue symbol_closed(const OperatorParams& params, double p);

/// Lattice-sum route to the same symbol:
///   F(p) = (2 pi)^4 / h^3 * [ sum_beta ((beta - z1)(beta - z2))^-2 ]^-1,
///   z1,2 = h p +- h/(2 pi),
/// truncated symmetrically at `terms`.  All summands are positive; partial
/// sums are compensated.  Truncation error of the inner sum is O(terms^-3),
/// so the returned value converges cubically to symbol_closed.  Throws
/// PoleProximity if z1 or z2 is within 1e-8 of an integer (a lattice pole,
/// equivalently a zero of the symbol), std::invalid_argument for terms < 1.
std::complex<double> symbol_series(const StepSize& h, double p, std::int64_t terms);

/// Trapezoid average of symbol * e^{-2 pi i p h beta} over one period of
/// length 1/h, using `nodes` equispaced points (>= 64).  The quadrature is
/// spectrally accurate: it aliases the true coefficient with terms damped by
/// |lambda1|^(nodes - |beta|).  The imaginary part must cancel to
/// <= 1e-9 * (1 + |result|); its real part is returned.
double fourier_coefficient(const OperatorParams& params, std::int64_t beta, std::int64_t nodes);

/// Node count chosen automatically: starts at 2^14 and doubles until two
/// successive answers agree to 1e-10 relative.
double fourier_coefficient(const OperatorParams& params, std::int64_t beta);

/// q(lambda) / (lambda Q2(lambda)) decomposed as
///   lambda + linear_term + a/lambda + a1/(lambda - lambda1) + b1/(lambda - lambda2).
/// a always equals 1; a1 is recomputed by the residue route
/// q(lambda1) / (lambda1^2 - 1) and must agree with params.a1 to 1e-10
/// relative (InconsistentA1 otherwise).
struct PartialFractions {
    double a;
    double a1;
    double b1;
    double lambda1;
    double lambda2;
    double linear_term;  ///< (2h cos 2h - sin 2h) / d
};

PartialFractions partial_fractions(const OperatorParams& params);

/// Evaluates the decomposition (times 2/d) at frequency p; must reproduce
/// symbol_closed away from the poles.
std::complex<double> reconstruct_symbol(const PartialFractions& pf, const OperatorParams& params,
                                        double p);

}  // namespace dok
