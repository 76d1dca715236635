#pragma once

// Sharp comparison thresholds between Q_{t,s} and the identric mean:
//
//   Q_{t,s} < I on all distinct pairs  iff  t <= p_s = 1/2 - sqrt(1 - (2/e)^{2/s}) / 2
//   I < Q_{t,s} on all distinct pairs  iff  t >= q_s = 1/2 - 1 / (2 sqrt(3s))
//
// and the exponential bounds exp(c v^2) on A/I, whose sharp constants are
// 1/6 (below) and ln(e/2) (above).

namespace imean {

struct ThresholdSet {
    double s;
    double p;  ///< upper end of the lower-bound interval [0, p_s]
    double q;  ///< lower end of the upper-bound interval [q_s, 1/2]
};

/// Closed-form thresholds for s >= 1. Each value is within one ulp of the
/// exact threshold and rounded onto the side where the corresponding
/// inequality holds, so that t = p_s and t = q_s are valid parameters as
/// represented. Throws DomainError for s < 1.
ThresholdSet sharp_thresholds(double s);

enum class Membership { lower_bound_holds, upper_bound_holds, neither };

/// Which comparison Q_{t,s} satisfies against I for every distinct pair.
Membership membership(double t, double s);

struct ExponentialBoundConstants {
    double lower;  ///< 1/6
    double upper;  ///< ln(e/2) = 1 - ln 2
};

ExponentialBoundConstants exponential_bound_constants() noexcept;

/// Re-derives p_s and q_s from the family's sign conditions:
/// (1 - 2 p_s)^2 + (2/e)^{2/s} = 1 and 3 s (1 - 2 q_s)^2 = 1, each to 1e-12.
bool threshold_consistency(double s);

const char* to_string(Membership m) noexcept;

}  // namespace imean
