#include "imean/thresholds.hpp"

#include "imean/extended.hpp"
#include "imean/numeric.hpp"

#include <cmath>

namespace imean {

namespace {

void require_s(double s) {
    require(std::isfinite(s) && s >= 1.0, "thresholds: s must be >= 1");
}

// 1 - (2/e)^{2/s} = -expm1((2/s)(ln 2 - 1)); the expm1 form keeps relative
// accuracy as s grows and the difference tends to 0.
double one_minus_two_over_e_pow(double s) {
    return -std::expm1((2.0 / s) * (constants::ln2 - 1.0));
}

double closed_p(double s) { return 0.5 - 0.5 * std::sqrt(one_minus_two_over_e_pow(s)); }

double closed_q(double s) { return 0.5 - 0.5 / std::sqrt(3.0 * s); }

}  // namespace

ThresholdSet sharp_thresholds(double s) {
    require_s(s);
    double p = closed_p(s);
    double q = closed_q(s);

    // Nudge onto the valid side; at most a couple of ulps.
    for (int i = 0; i < 8 && extended::lower_condition_sign(p, s) < 0; ++i)
        p = std::nextafter(p, 0.0);
    for (int i = 0; i < 8; ++i) {
        const double w = 1.0 - 2.0 * q;
        if (detail::one_minus_3su(s, w * w) >= 0.0) break;
        q = std::nextafter(q, 0.5);
    }
    return {s, p, q};
}

Membership membership(double t, double s) {
    require(t >= 0.0 && t <= 0.5, "membership: t must lie in [0, 1/2]");
    const ThresholdSet th = sharp_thresholds(s);
    if (t <= th.p) return Membership::lower_bound_holds;
    if (t >= th.q) return Membership::upper_bound_holds;
    return Membership::neither;
}

ExponentialBoundConstants exponential_bound_constants() noexcept {
    return {1.0 / 6.0, constants::ln_e_over_2};
}

bool threshold_consistency(double s) {
    require_s(s);
    const ThresholdSet th = sharp_thresholds(s);
    const double wp = 1.0 - 2.0 * th.p;
    const double wq = 1.0 - 2.0 * th.q;
    const double lower_residual = wp * wp - one_minus_two_over_e_pow(s);
    const double upper_residual = 3.0 * s * wq * wq - 1.0;
    return std::fabs(lower_residual) <= 1e-12 && std::fabs(upper_residual) <= 1e-12;
}

const char* to_string(Membership m) noexcept {
    switch (m) {
        case Membership::lower_bound_holds: return "lower_bound_holds";
        case Membership::upper_bound_holds: return "upper_bound_holds";
        case Membership::neither: return "neither";
    }
    return "?";
}

}  // namespace imean
