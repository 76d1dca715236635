#pragma once

// Re-evaluation of the key quantities in 113-bit binary floating point.
// These paths use the closed forms directly (no series, no rearrangement),
// so they are an independent check of the binary64 evaluators; they are used
// to confirm counterexample witnesses before reporting them.

#include "imean/family.hpp"

namespace imean::extended {

/// A value together with an absolute error bound for it.
struct Estimate {
    double value;
    double error_bound;

    [[nodiscard]] bool certainly_negative() const noexcept { return value < -error_bound; }
    [[nodiscard]] bool certainly_positive() const noexcept { return value > error_bound; }
};

/// ln(I/A)(v) from the closed form in extended precision.
Estimate log_ratio_I_over_A(double v);

/// f_{u,s}(x) from its closed form, u and s taken from `params`.
Estimate family_f(const FamilyParams& params, double x);

/// g_c(x) = ln(A/I)(x) - c x^2.
Estimate family_g(double coef, double x);

/// I^p - w A^p - (1-w) G^p on the pair (1+x, 1-x).
Estimate convex_power_gap(double p_exp, double weight, double x);

/// 1 - (2/e)^{2/s}.
double one_minus_two_over_e_pow(double s);

/// Sign of u + (2/e)^{2/s} - 1 for u = (1 - 2t)^2 in binary64 (the lower-side
/// condition of the family); +1, 0 or -1.
int lower_condition_sign(double t, double s);

}  // namespace imean::extended
