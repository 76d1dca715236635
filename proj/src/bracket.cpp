#include "imean/bracket.hpp"

#include "imean/numeric.hpp"

#include <cmath>

namespace imean {

BracketResult solve_bracketed(const std::function<double(double)>& fn,
                              double lo, double hi,
                              const BracketOptions& options) {
    if (!(lo < hi)) throw NumericalError("solve_bracketed: empty bracket");
    double f_lo = fn(lo);
    double f_hi = fn(hi);
    if (f_lo == 0.0) return {lo, 0.0, lo, lo, 0};
    if (f_hi == 0.0) return {hi, 0.0, hi, hi, 0};
    if (std::signbit(f_lo) == std::signbit(f_hi) || std::isnan(f_lo) || std::isnan(f_hi))
        throw NumericalError("solve_bracketed: endpoints do not bracket a root");

    int side = 0;  // which endpoint was retained last time (Illinois)
    int it = 0;
    double x = 0.5 * (lo + hi);
    double fx = 0.0;
    for (; it < options.max_iterations; ++it) {
        const double width = hi - lo;
        double candidate = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
        if (!(candidate > lo && candidate < hi)) candidate = 0.5 * (lo + hi);
        x = candidate;
        fx = fn(x);
        if (fx == 0.0) return {x, 0.0, x, x, it + 1};

        if (std::signbit(fx) == std::signbit(f_lo)) {
            lo = x;
            f_lo = fx;
            if (side == -1) f_hi *= 0.5;
            side = -1;
        } else {
            hi = x;
            f_hi = fx;
            if (side == +1) f_lo *= 0.5;
            side = +1;
        }

        // Interpolation stalled: take a bisection step.
        if (hi - lo > 0.5 * width) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            const double fm = fn(mid);
            if (fm == 0.0) return {mid, 0.0, mid, mid, it + 1};
            if (std::signbit(fm) == std::signbit(f_lo)) {
                lo = mid;
                f_lo = fm;
            } else {
                hi = mid;
                f_hi = fm;
            }
            side = 0;
        }
        if (hi - lo <= options.x_tolerance) {
            ++it;
            break;
        }
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            ++it;
            break;
        }
    }
    // Report the endpoint with the smaller residual; the halving applied by
    // the Illinois step only alters the stored values, so re-evaluate.
    const double r_lo = fn(lo);
    const double r_hi = fn(hi);
    if (std::fabs(r_lo) <= std::fabs(r_hi)) return {lo, r_lo, lo, hi, it};
    return {hi, r_hi, lo, hi, it};
}

}  // namespace imean
