#include "imean/certify.hpp"

#include "imean/family.hpp"
#include "imean/numeric.hpp"

#include <cmath>

namespace imean {

namespace {

// phi(x) = ln(A/I)(x) at a point.
Interval enclose_phi(double x) {
    const Interval X(x);
    if (x < 0.5) {
        const Interval x2 = X * X;
        Interval sum(0.0);
        Interval power = x2;
        int k = 1;
        for (; k <= 400; ++k) {
            const double den = 2.0 * k * (2.0 * k + 1.0);  // exact
            sum = sum + power / Interval(den);
            if (power.hi < 1e-22 * x2.lo) break;
            power = power * x2;
        }
        // Remaining terms are positive and bounded by the geometric tail
        // x^{2k+2} / ((2k+2)(2k+3)) / (1 - x^2).
        const Interval next = power * x2;
        const double den = (2.0 * k + 2.0) * (2.0 * k + 3.0);
        const Interval tail = next / (Interval(den) * (Interval(1.0) - x2));
        return sum + Interval(0.0, tail.hi);
    }
    const Interval onep = Interval(1.0) + X;
    const Interval onem = Interval(1.0) - X;
    const Interval num = onep * log1p(X) - onem * log1p(-X);
    return Interval(1.0) - num / (Interval(2.0) * X);
}

// c(x) = (s/2) ln(1 - u x^2) at a point.
Interval enclose_c(double u, double s, double x) {
    if (u == 0.0) return Interval(0.0);
    const Interval X(x);
    const Interval U(u);
    Interval log_term;
    if (u * x * x < 0.5) {
        log_term = log1p(-(U * X * X));
    } else {
        // u >= 1/2 on this branch, so 1 - u is exact.
        const Interval one_minus = (Interval(1.0) - X) * (Interval(1.0) + X) + Interval(1.0 - u) * X * X;
        log_term = log(one_minus);
    }
    return Interval(0.5 * s) * log_term;
}

}  // namespace

Interval enclose_family_f(double t, double s, double lo, double hi) {
    require(0.0 < lo && lo <= hi && hi < 1.0, "enclose_family_f: need 0 < lo <= hi < 1");
    const FamilyParams params(t, s);
    const double u = params.u();
    const Interval phi_lo = enclose_phi(lo);
    const Interval phi_hi = enclose_phi(hi);
    const Interval c_lo = enclose_c(u, s, lo);
    const Interval c_hi = enclose_c(u, s, hi);
    return Interval(phi_lo.lo, phi_hi.hi) + Interval(c_hi.lo, c_lo.hi);
}

CertificationResult certify_sign(double t, double s, double x_lo, double x_hi, Sign sign,
                                 std::size_t budget) {
    require(0.0 < x_lo && x_lo < x_hi && x_hi < 1.0, "certify_sign: need 0 < x_lo < x_hi < 1");
    require(budget >= 1, "certify_sign: budget must be >= 1");
    static_cast<void>(FamilyParams(t, s));  // validates the parameters

    struct Pending {
        double lo;
        double hi;
        int depth;
    };
    CertificationResult out;
    std::vector<Pending> stack{{x_lo, x_hi, 0}};
    while (!stack.empty()) {
        const Pending node = stack.back();
        stack.pop_back();
        const Interval bound = enclose_family_f(t, s, node.lo, node.hi);

        CertStatus status;
        const bool proved = sign == Sign::negative ? bound.hi < 0.0 : bound.lo > 0.0;
        const bool refuted = sign == Sign::negative ? bound.lo > 0.0 : bound.hi < 0.0;
        const double mid = 0.5 * (node.lo + node.hi);
        const bool splittable = mid > node.lo && mid < node.hi;
        // Room for this node and two children plus everything still pending.
        const bool room = out.nodes.size() + stack.size() + 3 <= budget;

        if (proved) {
            status = sign == Sign::negative ? CertStatus::proved_negative : CertStatus::proved_positive;
        } else if (!refuted && splittable && room) {
            status = CertStatus::split;
        } else {
            status = CertStatus::inconclusive;
            if (refuted) ++out.refuted;
            ++out.inconclusive;
        }
        out.nodes.push_back({node.lo, node.hi, bound, status, node.depth});
        if (status == CertStatus::split) {
            stack.push_back({mid, node.hi, node.depth + 1});
            stack.push_back({node.lo, mid, node.depth + 1});
        } else {
            ++out.leaves;
        }
    }
    out.proved = out.inconclusive == 0;
    return out;
}

const char* to_string(CertStatus s) noexcept {
    switch (s) {
        case CertStatus::proved_negative: return "proved_negative";
        case CertStatus::proved_positive: return "proved_positive";
        case CertStatus::split: return "split";
        case CertStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

const char* to_string(Sign s) noexcept { return s == Sign::negative ? "negative" : "positive"; }

Sign parse_sign(const std::string& text) {
    if (text == "negative") return Sign::negative;
    if (text == "positive") return Sign::positive;
    throw DomainError("sign must be 'negative' or 'positive', got: " + text);
}

}  // namespace imean
