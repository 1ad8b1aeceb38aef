#pragma once

#include <cstdint>
#include <optional>

namespace dok {

/// Validated lattice step.  Accepts any finite h with 0 < h < pi; steps in
/// (1, pi) are admissible but flagged, since the decay constant |lambda1|
/// approaches 1 as h -> pi and windowed checks lose their safety margin.
/// Construction from an integer denominator keeps the exact rational spelling
/// around for reporting.
class StepSize {
public:
    explicit StepSize(double h);

    /// h = 1/n for a positive integer n.
    static StepSize from_denominator(std::int64_t n);

    [[nodiscard]] double h() const noexcept { return h_; }
    [[nodiscard]] std::optional<std::int64_t> denominator() const noexcept { return n_; }

    /// True for h > 1 (valid, but outside the nominal range).
    [[nodiscard]] bool beyond_nominal() const noexcept;

private:
    double h_;
    std::optional<std::int64_t> n_;
};

}  // namespace dok
