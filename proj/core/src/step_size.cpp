#include "dok/step_size.hpp"

#include <cmath>
#include <string>

#include "dok/errors.hpp"

namespace dok {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

StepSize::StepSize(double h) : h_(h) {
    if (!std::isfinite(h) || !(h > 0.0) || !(h < kPi))
        throw InvalidStepSize("step h = " + std::to_string(h) + " outside (0, pi)");
}

StepSize StepSize::from_denominator(std::int64_t n) {
    if (n <= 0)
        throw InvalidStepSize("step denominator n = " + std::to_string(n) + " must be positive");
    StepSize s(1.0 / static_cast<double>(n));
    s.n_ = n;
    return s;
}

bool StepSize::beyond_nominal() const noexcept { return h_ > 1.0; }

}  // namespace dok
