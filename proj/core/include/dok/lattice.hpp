#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace dok {

/// Hard cap on lattice radii (sampling windows and certified truncation).
inline constexpr std::int64_t kRadiusCap = 1000000;

enum class Symmetry { even, odd, none };

/// Windowed table over integer lattice indices [lo, hi] with optional decay
/// metadata.  A signed tail_ratio r declares the geometric continuation
///   value(hi + k) = value(hi) * r^k,   value(lo - k) = value(lo) * r^k
/// which value_extended() applies; decay() = |r| is what truncation
/// certificates consume.  r = 0 declares compact support.
class LatticeFunction {
public:
    LatticeFunction(double h, std::int64_t lo, std::vector<double> values,
                    Symmetry symmetry = Symmetry::none,
                    std::optional<double> tail_ratio = std::nullopt);

    /// The unit mass at beta = 0 (window {0}, compact support).
    static LatticeFunction delta(double h);

    [[nodiscard]] double h() const noexcept { return h_; }
    [[nodiscard]] std::int64_t lo() const noexcept { return lo_; }
    [[nodiscard]] std::int64_t hi() const noexcept { return lo_ + static_cast<std::int64_t>(values_.size()) - 1; }
    [[nodiscard]] Symmetry symmetry() const noexcept { return symmetry_; }
    [[nodiscard]] std::optional<double> tail_ratio() const noexcept { return tail_ratio_; }
    [[nodiscard]] std::optional<double> decay() const noexcept;

    /// Stored value; throws std::out_of_range outside the window.
    [[nodiscard]] double value(std::int64_t beta) const;

    /// Stored value inside the window, geometric continuation outside.
    /// Throws NonDecayingKernel when no tail metadata is present.
    [[nodiscard]] double value_extended(std::int64_t beta) const;

private:
    double h_;
    std::int64_t lo_;
    std::vector<double> values_;
    Symmetry symmetry_;
    std::optional<double> tail_ratio_;
};

}  // namespace dok
