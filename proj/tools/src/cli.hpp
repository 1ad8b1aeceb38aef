#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dok/params.hpp"

namespace dok::cli {

enum class Command { params, kernel, symbol, check };
enum class OutputFormat { json, csv };

/// A step exactly as the user spelled it ("0.1" or "1/10"); the spelling is
/// echoed back in every document.
struct HValue {
    std::string text;
    double value = 0.0;
    std::optional<std::int64_t> denominator;
};

struct Options {
    Command command = Command::params;
    std::vector<HValue> steps;
    std::int64_t radius = 5;         ///< kernel: window [-radius, radius]
    std::int64_t grid = 128;         ///< symbol: frequency samples per period
    std::int64_t terms = 1000;       ///< symbol: lattice-sum terms for residuals
    std::int64_t delta_window = 20;  ///< check
    std::int64_t ann_window = 10;    ///< check
    std::optional<double> tol;           ///< check: delta tolerance override
    std::optional<double> ann_factor;    ///< check: annihilation factor override
    std::optional<double> spectral_tol;  ///< check: coefficient tolerance override
    std::uint32_t seed = 0x5eed5u;       ///< check: frequency-draw seed
    bool controls = false;               ///< check: append negative controls
    OutputFormat format = OutputFormat::json;
    std::string output_path;  ///< empty writes to the out stream
    PrecisionMode mode = PrecisionMode::fast;
};

/// Decimal ("0.1") or exact rational ("1/20"); throws std::invalid_argument
/// naming the offending text otherwise.  Range checks happen in run().
HValue parse_h(const std::string& text);

/// 0 success, 1 verification failure, 2 usage/configuration error.
int run(const Options& options, std::ostream& out, std::ostream& err);

/// Full argv entry point (argument parsing + DOK_PRECISION_MODE).
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dok::cli
