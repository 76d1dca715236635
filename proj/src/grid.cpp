#include "imean/grid.hpp"

#include "imean/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace imean {

void GridSpec::validate() const {
    require(count >= 2, "grid: count must be >= 2");
    require(x_min > 0.0 && x_min < x_max && x_max < 1.0,
            "grid: need 0 < x_min < x_max < 1");
}

std::vector<double> make_grid(const GridSpec& spec) {
    spec.validate();
    const std::size_t n = spec.count;
    std::vector<double> xs(n);

    if (spec.spacing == Spacing::uniform) {
        const double step = (spec.x_max - spec.x_min) / static_cast<double>(n - 1);
        for (std::size_t i = 0; i < n; ++i) xs[i] = spec.x_min + step * static_cast<double>(i);
        xs.back() = spec.x_max;
        return xs;
    }

    const double mid = (spec.x_min < 0.5 && 0.5 < spec.x_max) ? 0.5 : 0.5 * (spec.x_min + spec.x_max);
    const std::size_t left = (n + 1) / 2;  // includes mid
    const std::size_t right = n - left;

    // Left ladder: x from x_min to mid, geometric in x.
    const double log_lo = std::log(spec.x_min);
    const double log_mid = std::log(mid);
    for (std::size_t i = 0; i < left; ++i) {
        const double frac = left == 1 ? 1.0 : static_cast<double>(i) / static_cast<double>(left - 1);
        xs[i] = std::exp(log_lo + (log_mid - log_lo) * frac);
    }
    xs[0] = spec.x_min;
    xs[left - 1] = mid;

    // Right ladder: 1 - x from 1 - mid down to 1 - x_max, geometric, mid excluded.
    const double log_dmid = std::log(1.0 - mid);
    const double log_dhi = std::log(1.0 - spec.x_max);
    for (std::size_t j = 1; j <= right; ++j) {
        const double frac = static_cast<double>(j) / static_cast<double>(right);
        xs[left - 1 + j] = 1.0 - std::exp(log_dmid + (log_dhi - log_dmid) * frac);
    }
    if (right > 0) xs.back() = spec.x_max;
    return xs;
}

const char* to_string(Spacing s) noexcept {
    return s == Spacing::uniform ? "uniform" : "endpoint_refined";
}

Spacing parse_spacing(const std::string& text) {
    if (text == "uniform") return Spacing::uniform;
    if (text == "endpoint_refined" || text == "refined") return Spacing::endpoint_refined;
    throw DomainError("unknown grid spacing: " + text);
}

}  // namespace imean
