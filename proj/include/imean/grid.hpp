#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace imean {

enum class Spacing { uniform, endpoint_refined };

/// Sample set on (0, 1) for the gap coordinate.
///
/// `endpoint_refined` splits the points between two geometric ladders: one
/// in x accumulating at x_min, one in 1 - x accumulating at x_max. Failures
/// of the sharp comparisons only show up as x -> 0 or x -> 1, so a uniform
/// grid is the wrong default.
struct GridSpec {
    std::size_t count = 10000;
    Spacing spacing = Spacing::endpoint_refined;
    double x_min = 1e-9;
    double x_max = 1.0 - 1e-9;

    /// Throws DomainError unless count >= 2 and 0 < x_min < x_max < 1.
    void validate() const;
};

/// Points in ascending order, first = x_min, last = x_max.
std::vector<double> make_grid(const GridSpec& spec);

const char* to_string(Spacing s) noexcept;
Spacing parse_spacing(const std::string& text);

}  // namespace imean
