#pragma once

#include <stdexcept>
#include <string>

namespace dok {

/// Base class for all library-specific failures.  Construction misuse
/// (bad window sizes, null callables, ...) throws std::invalid_argument
/// instead; everything that depends on the numerics derives from Error.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Step outside the admissible range (must satisfy 0 < h < pi, finite).
class InvalidStepSize : public Error {
public:
    using Error::Error;
};

/// The characteristic quadratic lost its root separation: |lambda1| is
/// within 1e-12 of the unit circle, so the geometric tail no longer decays.
class DegenerateRoots : public Error {
public:
    using Error::Error;
};

/// Series and direct evaluation disagree inside the overlap window
/// (raised only in strict precision mode).
class BranchMismatch : public Error {
public:
    using Error::Error;
};

/// A sampled kernel window too small to carry the tail metadata.
class RadiusTooSmall : public Error {
public:
    using Error::Error;
};

/// Finite-difference probe point closer to the origin kink than the stencil
/// can tolerate.
class TooCloseToOrigin : public Error {
public:
    using Error::Error;
};

/// Convolution kernel lacks decay metadata, or its tail ratio is >= 1.
class NonDecayingKernel : public Error {
public:
    using Error::Error;
};

/// Requested truncation tolerance cannot be certified: either the radius cap
/// is reached or the accumulation rounding floor alone exceeds the target.
class TolUnachievable : public Error {
public:
    using Error::Error;
};

/// Series evaluation point within 1e-8 of a lattice pole.
class PoleProximity : public Error {
public:
    using Error::Error;
};

/// Residue route and closed-form route for the leading coefficient disagree
/// beyond 1e-10 relative.
class InconsistentA1 : public Error {
public:
    using Error::Error;
};

/// Verification suite invoked with an empty step list.
class EmptyInput : public Error {
public:
    using Error::Error;
};

}  // namespace dok
