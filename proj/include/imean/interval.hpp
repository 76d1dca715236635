#pragma once

// Minimal outward-rounded interval arithmetic. Basic operations are
// correctly rounded in binary64, so widening each computed bound by one ulp
// gives a valid enclosure without switching the FPU rounding mode. Library
// logarithms are not guaranteed correctly rounded; their bounds are widened
// by two ulps.

#include <cmath>
#include <limits>

#include "imean/numeric.hpp"

namespace imean {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    constexpr Interval(double point) : lo(point), hi(point) {}  // NOLINT: implicit by design of the arithmetic
    constexpr Interval(double l, double h) : lo(l), hi(h) {}

    [[nodiscard]] bool contains(double x) const noexcept { return lo <= x && x <= hi; }
    [[nodiscard]] bool contains_zero() const noexcept { return lo <= 0.0 && 0.0 <= hi; }
    [[nodiscard]] double width() const noexcept { return hi - lo; }
};

namespace interval_detail {
inline double down(double x, int ulps = 1) noexcept {
    for (int i = 0; i < ulps; ++i) x = std::nextafter(x, -std::numeric_limits<double>::infinity());
    return x;
}
inline double up(double x, int ulps = 1) noexcept {
    for (int i = 0; i < ulps; ++i) x = std::nextafter(x, std::numeric_limits<double>::infinity());
    return x;
}
}  // namespace interval_detail

inline Interval operator+(Interval a, Interval b) noexcept {
    using namespace interval_detail;
    return {down(a.lo + b.lo), up(a.hi + b.hi)};
}

inline Interval operator-(Interval a, Interval b) noexcept {
    using namespace interval_detail;
    return {down(a.lo - b.hi), up(a.hi - b.lo)};
}

inline Interval operator-(Interval a) noexcept { return {-a.hi, -a.lo}; }

inline Interval operator*(Interval a, Interval b) noexcept {
    using namespace interval_detail;
    const double p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    double lo = p[0];
    double hi = p[0];
    for (double v : p) {
        lo = std::fmin(lo, v);
        hi = std::fmax(hi, v);
    }
    return {down(lo), up(hi)};
}

/// Division; the divisor must not contain zero.
inline Interval operator/(Interval a, Interval b) {
    using namespace interval_detail;
    if (b.contains_zero()) throw NumericalError("interval division by an interval containing 0");
    const double q[4] = {a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
    double lo = q[0];
    double hi = q[0];
    for (double v : q) {
        lo = std::fmin(lo, v);
        hi = std::fmax(hi, v);
    }
    return {down(lo), up(hi)};
}

/// ln over a positive interval, by monotonicity.
inline Interval log(Interval a) {
    using namespace interval_detail;
    if (!(a.lo > 0.0)) throw NumericalError("interval log of a non-positive interval");
    return {down(std::log(a.lo), 2), up(std::log(a.hi), 2)};
}

/// ln(1 + a) over an interval with a.lo > -1, by monotonicity.
inline Interval log1p(Interval a) {
    using namespace interval_detail;
    if (!(a.lo > -1.0)) throw NumericalError("interval log1p below -1");
    return {down(std::log1p(a.lo), 2), up(std::log1p(a.hi), 2)};
}

}  // namespace imean
