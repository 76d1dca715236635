#include "imean/means.hpp"

#include "imean/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace imean {

PositivePair::PositivePair(double a, double b) : a_(a), b_(b) {
    require(std::isfinite(a) && std::isfinite(b) && a > 0.0 && b > 0.0,
            "PositivePair requires finite a > 0 and b > 0");
}

PositivePair PositivePair::from_gap(double v) {
    require(v >= 0.0 && v < 1.0, "gap must lie in [0, 1)");
    return {1.0 + v, 1.0 - v};
}

GapCoordinate::GapCoordinate(double v) : v_(v) {
    require(v >= 0.0 && v < 1.0, "gap must lie in [0, 1)");
}

double arithmetic_mean(const PositivePair& p) noexcept {
    return 0.5 * p.a() + 0.5 * p.b();
}

double geometric_mean(const PositivePair& p) noexcept {
    const double prod = p.a() * p.b();
    if (std::isnormal(prod) && std::isfinite(prod)) return std::sqrt(prod);
    return std::sqrt(p.a()) * std::sqrt(p.b());
}

double harmonic_mean(const PositivePair& p) noexcept {
    // H = G^2 / A = hi * (lo / A); ordered so swapping a and b is exact.
    const double A = arithmetic_mean(p);
    const double hi = std::max(p.a(), p.b());
    const double lo = std::min(p.a(), p.b());
    return hi * (lo / A);
}

GapCoordinate gap(const PositivePair& p) noexcept {
    const double d = std::fabs(p.a() - p.b());
    // a + b may overflow; the ratio is scale-free.
    const double a = 0.5 * p.a();
    const double b = 0.5 * p.b();
    return GapCoordinate(0.5 * d / (a + b));
}

double identric_mean(const PositivePair& p) {
    if (!p.distinct()) return p.a();
    const double hi = std::max(p.a(), p.b());
    const double lo = std::min(p.a(), p.b());
    const double r = lo / hi;
    if (r <= 1.0 / 9.0) {
        // Same quantity as the gap form at v >= 0.8, but 1 - v is never
        // formed, so extreme ratios keep full relative accuracy.
        return hi * std::exp(-1.0 - r * std::log(r) / (1.0 - r));
    }
    const double A = arithmetic_mean(p);
    return A * std::exp(-detail::log_ratio_A_over_I(gap(p).value()));
}

double q_mean(const PositivePair& p, double t, double s) {
    require(t >= 0.0 && t <= 0.5, "q_mean: t must lie in [0, 1/2]");
    require(std::isfinite(s) && s >= 1.0, "q_mean: s must be >= 1");
    const double A = arithmetic_mean(p);
    if (!p.distinct() || t == 0.5) return A;
    const double w = 1.0 - 2.0 * t;
    const double u = w * w;
    const double v = gap(p).value();
    return A * std::exp(0.5 * s * detail::log_one_minus_u_x2(u, v));
}

double log_ratio_I_over_A(GapCoordinate v) {
    return -detail::log_ratio_A_over_I(v.value());
}

double log_ratio_I_over_A(double v) {
    return log_ratio_I_over_A(GapCoordinate(v));
}

namespace detail {

double log_ratio_A_over_I_series(double v, int max_terms) noexcept {
    const double v2 = v * v;
    if (v2 == 0.0) return 0.0;
    const int limit = max_terms > 0 ? max_terms : 200;
    double sum = 0.0;
    double power = v2;
    for (int k = 1; k <= limit; ++k) {
        const double term = power / (2.0 * k * (2.0 * k + 1.0));
        sum += term;
        if (max_terms == 0 && term <= 1e-18 * sum) break;
        power *= v2;
    }
    return sum;
}

double log_ratio_A_over_I_direct(double v) noexcept {
    const double num = (1.0 + v) * std::log1p(v) - (1.0 - v) * std::log1p(-v);
    return 1.0 - num / (2.0 * v);
}

double log_ratio_A_over_I(double v) noexcept {
    // The closed form cancels by up to ~8 ulps below 0.8; the positive
    // series needs at most ~75 terms there.
    if (v < 0.8) return log_ratio_A_over_I_series(v);
    return log_ratio_A_over_I_direct(v);
}

double log_one_minus_u_x2(double u, double x) noexcept {
    const double ux2 = u * x * x;
    if (ux2 < 0.5) return std::log1p(-ux2);
    // u > 1/2 here, so 1 - u is exact.
    const double one_minus = (1.0 - x) * (1.0 + x) + (1.0 - u) * (x * x);
    return std::log(one_minus);
}

}  // namespace detail

}  // namespace imean
