#include "dok/lattice.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dok/errors.hpp"

namespace dok {

LatticeFunction::LatticeFunction(double h, std::int64_t lo, std::vector<double> values,
                                 Symmetry symmetry, std::optional<double> tail_ratio)
    : h_(h), lo_(lo), values_(std::move(values)), symmetry_(symmetry), tail_ratio_(tail_ratio) {
    if (!std::isfinite(h) || !(h > 0.0))
        throw std::invalid_argument("lattice step must be finite and positive");
    if (values_.empty())
        throw std::invalid_argument("lattice window must hold at least one value");
    if (tail_ratio_ && !std::isfinite(*tail_ratio_))
        throw std::invalid_argument("tail ratio must be finite");
    if (symmetry_ != Symmetry::none) {
        const double sign = symmetry_ == Symmetry::even ? 1.0 : -1.0;
        const std::int64_t from = std::max(lo_, -hi());
        const std::int64_t to = std::min(hi(), -lo_);
        for (std::int64_t b = from; b <= to; ++b) {
            if (values_[static_cast<std::size_t>(b - lo_)] !=
                sign * values_[static_cast<std::size_t>(-b - lo_)])
                throw std::invalid_argument("declared symmetry violated at beta = " +
                                            std::to_string(b));
        }
    }
}

LatticeFunction LatticeFunction::delta(double h) {
    return LatticeFunction(h, 0, {1.0}, Symmetry::even, 0.0);
}

std::optional<double> LatticeFunction::decay() const noexcept {
    if (!tail_ratio_) return std::nullopt;
    return std::abs(*tail_ratio_);
}

double LatticeFunction::value(std::int64_t beta) const {
    if (beta < lo_ || beta > hi())
        throw std::out_of_range("beta = " + std::to_string(beta) + " outside window [" +
                                std::to_string(lo_) + ", " + std::to_string(hi()) + "]");
    return values_[static_cast<std::size_t>(beta - lo_)];
}

double LatticeFunction::value_extended(std::int64_t beta) const {
    if (beta >= lo_ && beta <= hi()) return values_[static_cast<std::size_t>(beta - lo_)];
    if (!tail_ratio_)
        throw NonDecayingKernel("no tail metadata to continue beyond [" + std::to_string(lo_) +
                                ", " + std::to_string(hi()) + "]");
    const double r = *tail_ratio_;
    if (beta > hi()) return values_.back() * std::pow(r, double(beta - hi()));
    return values_.front() * std::pow(r, double(lo_ - beta));
}

}  // namespace dok
