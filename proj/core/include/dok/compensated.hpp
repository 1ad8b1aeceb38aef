#pragma once

#include <cmath>

namespace dok {

/// Neumaier-compensated accumulator.  Error of the returned value is bounded
/// by ~2 eps * sum(|x_i|) independent of the number of terms, which is what
/// the convolution rounding-floor certificates assume.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

    void reset() noexcept { sum_ = comp_ = 0.0; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace dok
