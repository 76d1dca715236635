#pragma once

// Sign certification of f_{(1-2t)^2, s} on a compact subinterval of (0, 1)
// by adaptive bisection with outward-rounded enclosures.
//
// f = phi + c with phi(x) = ln(A/I)(x) increasing (all series coefficients
// are positive) and c(x) = (s/2) ln(1 - u x^2) decreasing, so on [lo, hi]
//
//   f in [phi(lo) + c(hi), phi(hi) + c(lo)]
//
// with each endpoint value itself enclosed by interval evaluation.

#include "imean/interval.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace imean {

enum class Sign { negative, positive };
enum class CertStatus { proved_negative, proved_positive, split, inconclusive };

struct CertificateNode {
    double lo;
    double hi;
    Interval bound;  ///< enclosure of f over [lo, hi]
    CertStatus status;
    int depth;
};

struct CertificationResult {
    /// Every node visited, in depth-first pre-order.
    std::vector<CertificateNode> nodes;
    bool proved = false;            ///< all leaves carry the requested proof
    std::size_t leaves = 0;
    std::size_t inconclusive = 0;
    /// Leaves whose enclosure lies entirely on the wrong side of 0.
    std::size_t refuted = 0;
};

/// Enclosure of f_{(1-2t)^2, s} over [lo, hi] (0 < lo <= hi < 1).
Interval enclose_family_f(double t, double s, double lo, double hi);

/// Certify sign(f) on [x_lo, x_hi] with at most `budget` nodes. Leaves that
/// cannot be decided within the budget are `inconclusive`, which is not a
/// disproof.
CertificationResult certify_sign(double t, double s, double x_lo, double x_hi, Sign sign,
                                 std::size_t budget);

const char* to_string(CertStatus s) noexcept;
const char* to_string(Sign s) noexcept;
Sign parse_sign(const std::string& text);

}  // namespace imean
