#pragma once

#include <functional>

namespace imean {

struct BracketOptions {
    double x_tolerance = 1e-14;
    int max_iterations = 200;
};

struct BracketResult {
    double root = 0.0;
    double value = 0.0;   ///< function value at `root`
    double lo = 0.0;      ///< final bracket
    double hi = 0.0;
    int iterations = 0;
};

/// Safeguarded bracketing solver: regula falsi with the Illinois
/// modification, falling back to bisection whenever the interpolated point
/// fails to shrink the bracket by half. Requires fn(lo) and fn(hi) of
/// opposite sign (or one of them zero); throws NumericalError otherwise.
/// The bracket is kept for the whole run, so the result is always inside it.
BracketResult solve_bracketed(const std::function<double(double)>& fn,
                              double lo, double hi,
                              const BracketOptions& options = {});

}  // namespace imean
